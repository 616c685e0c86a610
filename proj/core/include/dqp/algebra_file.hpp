#ifndef DQP_ALGEBRA_FILE_HPP
#define DQP_ALGEBRA_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dqp/double_bracket.hpp"

namespace dqp {

/// Parsed input document: an algebra plus its double bracket and tau.
/// All indices in the file format are 0-based; rationals are "p/q" strings;
/// omitted entries are zero and duplicate keys are summed on load.
struct AlgebraInput {
  Algebra algebra;
  DoubleBracket bracket;
  std::string name;
  std::vector<std::string> certified_by;  // optional manifest: checks that certify the file
};

/// Loads from a JSON document with fields:
///   dimension            integer >= 1
///   basis_names          [string...]            (optional)
///   unit                 [[index, "p/q"]...]
///   structure_constants  [[i, j, k, "p/q"]...]  (e_i e_j has coeff on e_k)
///   bracket              [[i, j, k, l, "p/q"]...]  ({{e_i,e_j}} has coeff on e_k (x) e_l)
///   tau                  "p/q"
///   name, certified_by   optional metadata
/// Throws ParseError with location context on malformed input.
AlgebraInput load_algebra_file(const std::string& path);
AlgebraInput parse_algebra_json(const std::string& text, const std::string& origin);

/// Serializes back to the same JSON schema (sorted entries, reduced
/// fractions), so parse -> serialize -> parse is the identity.
std::string serialize_algebra(const AlgebraInput& input);

/// FNV-1a 64-bit digest of the raw file bytes, as fixed-width hex.
std::string content_digest(const std::string& bytes);

}  // namespace dqp

#endif
