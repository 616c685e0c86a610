#include "dqp/report.hpp"

#include <json.hpp>

namespace dqp {

bool RunReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string RunReport::to_json(bool pretty) const {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["command"] = command;
  if (!input_path.empty()) {
    doc["input"] = input_path;
    doc["input_digest"] = input_digest;
    if (!input_name.empty()) doc["input_name"] = input_name;
  }
  doc["seed"] = seed;
  if (!tau.empty()) {
    doc["tau"] = tau;
    doc["tau_overridden"] = tau_overridden;
  }
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = c.passed ? "pass" : "fail";
    e["checked"] = c.checked;
    e["seconds"] = c.seconds;
    if (!c.witnesses.empty()) e["witnesses"] = c.witnesses;
    cs.push_back(std::move(e));
  }
  doc["checks"] = cs;
  doc["exit_code"] = exit_code();
  return pretty ? doc.dump(2) + "\n" : doc.dump();
}

}  // namespace dqp
