#ifndef DQP_DOUBLE_BRACKET_HPP
#define DQP_DOUBLE_BRACKET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqp/tensor.hpp"

namespace dqp {

struct BracketDefect {
  std::string check;            // "db1", "db2", "jacobi", "quasi"
  std::vector<int> where;       // offending basis indices
  std::string lhs, rhs;         // exact values, printed
};

struct BracketReport {
  std::vector<BracketDefect> defects;
  std::uint64_t checked = 0;
  bool ok() const { return defects.empty(); }
};

/// Double bracket on A as a full basis table {{e_i, e_j}} in A (x) A, with
/// the quasi-Poisson parameter tau attached to the bracket itself. Owns a
/// copy of its algebra, so brackets move and store safely.
class DoubleBracket {
 public:
  DoubleBracket(const Algebra& alg, std::vector<TensorElem> table, Rational tau);

  static DoubleBracket zero(const Algebra& alg, Rational tau);

  /// Leibniz-extends a bracket given on generators over a monomial basis.
  /// words[i] spells basis element i as a product of generator basis indices
  /// (the empty word is the unit), and gen_table[g][h] = {{e_g, e_h}} for
  /// generators g, h. Convenience for building examples; the result is only
  /// trusted after check_db1/check_db2 pass.
  static DoubleBracket leibniz_extend(const Algebra& alg,
                                      const std::vector<std::vector<int>>& words,
                                      const std::map<std::pair<int, int>, TensorElem>& gen_table,
                                      Rational tau);

  const Algebra& algebra() const { return alg_; }
  const Rational& tau() const { return tau_; }
  const TensorElem& table(int i, int j) const { return table_[i * alg_.dim() + j]; }

  DoubleBracket with_tau(Rational tau) const;

  TensorElem eval(const AlgElem& a, const AlgElem& b) const;

  BracketReport check_db1() const;  // skew-symmetry under the flip
  BracketReport check_db2() const;  // Leibniz in the second argument

  /// {{c,b,a}} = {{c,{{b,a}}}}_L + sigma {{b,{{a,c}}}}_L + sigma^2 {{a,{{c,b}}}}_L.
  TensorElem triple_bracket(const AlgElem& c, const AlgElem& b, const AlgElem& a) const;

  BracketReport is_double_poisson() const;  // triple bracket vanishes
  BracketReport is_quasi_poisson() const;   // triple bracket = tau * closed form

 private:
  Algebra alg_;
  std::vector<TensorElem> table_;
  Rational tau_;
};

/// Distinguished double derivation a -> a (x) 1 - 1 (x) a.
TensorElem e_derivation(const Algebra& alg, const AlgElem& a);

/// {{c,b,a}}_{E^3}: the triple bracket of E (x) E (x) E, by the cyclic sum of
/// the Sweedler expansion. Independent of e3_closed_form by construction.
TensorElem mu_e3_bracket(const Algebra& alg, const AlgElem& c, const AlgElem& b, const AlgElem& a);

/// Closed form of (1/12) {{c,b,a}}_{E^3}:
///   1/4 ( ac(x)b(x)1 - ac(x)1(x)b - a(x)cb(x)1 + a(x)c(x)b
///       + c(x)1(x)ba - c(x)b(x)a + 1(x)cb(x)a - 1(x)c(x)ba ).
TensorElem e3_closed_form(const Algebra& alg, const AlgElem& c, const AlgElem& b, const AlgElem& a);

/// Left extension {{x, u_1 (x) ... (x) u_n}}_L = {{x, u_1}} (x) u_2 ... u_n.
TensorElem bracket_left_extension(const DoubleBracket& db, const AlgElem& x, const TensorElem& T);

}  // namespace dqp

#endif
