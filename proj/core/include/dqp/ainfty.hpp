#ifndef DQP_AINFTY_HPP
#define DQP_AINFTY_HPP

#include <span>
#include <string>
#include <vector>

#include "dqp/combinatorics.hpp"
#include "dqp/cyclic.hpp"
#include "dqp/double_bracket.hpp"

namespace dqp {

struct SupportReport {
  std::string map_name;
  std::vector<std::string> violations;
  std::uint64_t checked = 0;
  bool ok() const { return violations.empty(); }
};

/// The multiplications on dA = A + A^#[-1] induced by a double bracket:
/// m2 the graded product, m3 the good map carrying the bracket, the even
/// m_n (n >= 4) built from the cyclic reduction with Bernoulli-number
/// coefficients, and zero in every other arity. Immutable; the coefficient
/// table is filled at construction for arities up to max_n.
class AInftyStructure {
 public:
  AInftyStructure(const DoubleBracket& db, int max_n);
  AInftyStructure(const DoubleBracket& db, Rational tau_override, int max_n);

  const Algebra& algebra() const { return db_->algebra(); }
  const DoubleBracket& bracket() const { return *db_; }
  const Rational& tau() const { return tau_; }
  int max_n() const { return max_n_; }
  const CCoeffTable& coefficients() const { return ccoeffs_; }

  /// Test hook for negative controls: perturbs one C coefficient.
  void corrupt_coefficient(long i, long j, const Rational& delta) { ccoeffs_.corrupt(i, j, delta); }

  /// m3 on three pure-parity slots. Nonzero only on the alternating patterns:
  ///   (0,1,0): m3(b,tg,a) in A with f(m3(b,tg,a)) = (f(x)g)({{a,b}}),
  ///   (1,0,1): m3(tf,b,tg) in A^#[-1], a -> (f(x)g)({{a,b}}).
  PhiElem m3(const MixedSlot& x1, const MixedSlot& x2, const MixedSlot& x3) const;

  /// g(m_n(x_1..x_n), x_0) for even n >= 4 on a word of n+1 pure slots:
  /// zero unless the word carries exactly n-1 functionals, else the cyclic
  /// reduction ev o M o pi.
  Rational pair_mn(int n, std::span<const MixedSlot> word) const;

  /// m_n for even n >= 4, reconstructed against the dual basis from pair_mn.
  PhiElem mn(int n, std::span<const MixedSlot> args) const;

  /// Dispatch for any arity: m1 = 0, m2, m3, even m_n, zero for odd n >= 5.
  PhiElem apply(int n, std::span<const MixedSlot> args) const;

  /// g(m_n(x_1..x_n), x_0) for any arity (word has n+1 slots).
  Rational pair_apply(int n, std::span<const MixedSlot> word) const;

  /// The maps b_jbar of the finiteness condition, as explicit tensors:
  /// (f_1 (x)...(x) f_{n-1})(b(sa,sb)) = g(m_n(a,tf_1..tf_l,b,tf_{l+1}..),tf_{n-1}).
  /// ell = 0 gives 0; n = 3 gives -{{a,b}}; higher even n give the
  /// C-weighted unit-padded tensors. Zero for odd n >= 5.
  TensorElem b_map(int n, int ell, const AlgElem& a, const AlgElem& b) const;

  /// Support checks over all parity patterns with all basis fillings.
  /// check_acceptable(1) is void; check_acceptable(2) verifies parity
  /// closure of the product; n >= 3 checks the acceptable-map support.
  SupportReport check_acceptable(int n) const;
  /// Odd n >= 3: vanishes off the alternating patterns and lands in the
  /// first slot's component on them.
  SupportReport check_good(int n) const;

 private:
  const DoubleBracket* db_;
  Rational tau_;
  int max_n_;
  CCoeffTable ccoeffs_;
};

}  // namespace dqp

#endif
