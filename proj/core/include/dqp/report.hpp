#ifndef DQP_REPORT_HPP
#define DQP_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dqp {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// One verification check in the run report. Failed checks carry at least
/// one witness string (offending tuple plus its exact value).
struct CheckStatus {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::vector<std::string> witnesses;
  double seconds = 0;
};

struct RunReport {
  std::string command;
  std::string input_path;
  std::string input_digest;
  std::string input_name;
  std::uint64_t seed = 0;
  bool tau_overridden = false;
  std::string tau;
  std::vector<CheckStatus> checks;

  void add(CheckStatus status) { checks.push_back(std::move(status)); }
  bool all_passed() const;
  /// 0 all checks pass, 2 at least one violation. (Input errors never get
  /// this far; the CLI maps them to exit 1.)
  int exit_code() const { return all_passed() ? 0 : 2; }
  /// JSON rendering; timing fields are the only non-reproducible part.
  std::string to_json(bool pretty = true) const;
};

}  // namespace dqp

#endif
