#include "dqp/algebra_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dqp {

namespace {
using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ParseError(origin + ": " + what);
}

int read_index(const json& v, int dim, const std::string& origin, const std::string& where) {
  if (!v.is_number_integer()) fail(origin, where + ": index must be an integer");
  const long idx = v.get<long>();
  if (idx < 0 || idx >= dim)
    fail(origin, where + ": index " + std::to_string(idx) + " out of range [0," +
                     std::to_string(dim - 1) + "]");
  return static_cast<int>(idx);
}

Rational read_rational(const json& v, const std::string& origin, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(origin, where + ": rational must be a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(origin, where + ": " + e.what());
  }
}
}  // namespace

AlgebraInput parse_algebra_json(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object()) fail(origin, "top-level value must be an object");
  if (!doc.contains("dimension")) fail(origin, "missing \"dimension\"");
  const long dim_l = doc["dimension"].is_number_integer() ? doc["dimension"].get<long>() : -1;
  if (dim_l < 1 || dim_l > 4096) fail(origin, "\"dimension\" must be a positive integer");
  const int dim = static_cast<int>(dim_l);

  std::vector<std::string> names;
  if (doc.contains("basis_names")) {
    if (!doc["basis_names"].is_array()) fail(origin, "\"basis_names\" must be an array");
    for (const auto& n : doc["basis_names"]) {
      if (!n.is_string()) fail(origin, "basis names must be strings");
      names.push_back(n.get<std::string>());
    }
    if (static_cast<int>(names.size()) != dim)
      fail(origin, "\"basis_names\" must list exactly dimension entries");
  }

  SparseVec unit;
  if (!doc.contains("unit")) fail(origin, "missing \"unit\"");
  for (std::size_t r = 0; r < doc["unit"].size(); ++r) {
    const auto& row = doc["unit"][r];
    const std::string where = "unit[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != 2) fail(origin, where + ": expected [index, \"p/q\"]");
    unit.add(read_index(row[0], dim, origin, where), read_rational(row[1], origin, where));
  }

  std::vector<SparseVec> table(dim * dim);
  if (doc.contains("structure_constants")) {
    for (std::size_t r = 0; r < doc["structure_constants"].size(); ++r) {
      const auto& row = doc["structure_constants"][r];
      const std::string where = "structure_constants[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != 4)
        fail(origin, where + ": expected [i, j, k, \"p/q\"]");
      const int i = read_index(row[0], dim, origin, where);
      const int j = read_index(row[1], dim, origin, where);
      const int k = read_index(row[2], dim, origin, where);
      table[i * dim + j].add(k, read_rational(row[3], origin, where));
    }
  }

  std::vector<TensorElem> bracket(dim * dim, TensorElem(2));
  if (doc.contains("bracket")) {
    for (std::size_t r = 0; r < doc["bracket"].size(); ++r) {
      const auto& row = doc["bracket"][r];
      const std::string where = "bracket[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != 5)
        fail(origin, where + ": expected [i, j, k, l, \"p/q\"]");
      const int i = read_index(row[0], dim, origin, where);
      const int j = read_index(row[1], dim, origin, where);
      const int k = read_index(row[2], dim, origin, where);
      const int l = read_index(row[3], dim, origin, where);
      bracket[i * dim + j].add({k, l}, read_rational(row[4], origin, where));
    }
  }

  Rational tau(0);
  if (doc.contains("tau")) tau = read_rational(doc["tau"], origin, "tau");

  Algebra alg(dim, std::move(names), std::move(table), std::move(unit));
  DoubleBracket db(alg, std::move(bracket), std::move(tau));
  AlgebraInput input{std::move(alg), std::move(db), "", {}};
  if (doc.contains("name") && doc["name"].is_string()) input.name = doc["name"].get<std::string>();
  if (doc.contains("certified_by") && doc["certified_by"].is_array())
    for (const auto& c : doc["certified_by"])
      if (c.is_string()) input.certified_by.push_back(c.get<std::string>());
  return input;
}

AlgebraInput load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str(), path);
}

std::string serialize_algebra(const AlgebraInput& input) {
  json doc;
  const Algebra& alg = input.algebra;
  const int dim = alg.dim();
  doc["dimension"] = dim;
  doc["basis_names"] = alg.basis_names();
  if (!input.name.empty()) doc["name"] = input.name;
  if (!input.certified_by.empty()) doc["certified_by"] = input.certified_by;
  json unit = json::array();
  for (const auto& [k, v] : alg.unit().v.entries()) unit.push_back({k, rational_str(v)});
  doc["unit"] = unit;
  json sc = json::array();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (const auto& [k, v] : alg.product_of_basis(i, j).entries())
        sc.push_back({i, j, k, rational_str(v)});
  doc["structure_constants"] = sc;
  json br = json::array();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (const auto& [idx, v] : input.bracket.table(i, j).entries())
        br.push_back({i, j, idx[0], idx[1], rational_str(v)});
  doc["bracket"] = br;
  doc["tau"] = rational_str(input.bracket.tau());
  return doc.dump(2) + "\n";
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace dqp
