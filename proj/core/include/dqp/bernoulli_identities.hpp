#ifndef DQP_BERNOULLI_IDENTITIES_HPP
#define DQP_BERNOULLI_IDENTITIES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dqp/combinatorics.hpp"

namespace dqp {

/// Substitutable weights standing in for the Bernoulli numbers at even
/// indices. The identity checks are binomial-coefficient identities at
/// heart, so they must hold for arbitrary weights, not just Bernoulli
/// values; indicator and random sequences turn "0 = 0" into genuine
/// coefficient-level checks.
class WeightSequence {
 public:
  static WeightSequence bernoulli_defaults(long max_index);
  static WeightSequence zeros(long max_index);

  void set(long index, Rational value) { values_[index] = std::move(value); }
  Rational at(long index) const {
    auto it = values_.find(index);
    return it == values_.end() ? Rational(0) : it->second;
  }

 private:
  std::map<long, Rational> values_;
};

/// Residual of the triple-sum coefficient identity behind the odd Stasheff
/// identities, expanded as a bilinear form in the weights (the normal shape;
/// the w_{2k} term linear, products w_{2i} w_{2k-2i} quadratic). Zero with
/// Bernoulli weights for every admissible triple. tau enters as the overall
/// factor tau^k. Requires l1+l2+l3 odd and >= 5.
Rational residual_cgen(long l1, long l2, long l3, const Rational& tau, const WeightSequence& w);

/// Same residual computed the direct way, as sums of products of the
/// C-coefficients themselves; the agreement of the two routes is part of
/// the test surface.
Rational residual_cgen_direct(long l1, long l2, long l3, const Rational& tau,
                              const WeightSequence& w);

/// The single generic sum appearing on the quadratic side, full-range form:
///   (-1)^k sum_{i=1}^{k-1} C(2i-1,l1-1) C(2k-2i-1,l3-1) w_{2i} w_{2k-2i} / ((2i)!(2k-2i)!)
Rational script_e(long l1, long l2, long l3, const WeightSequence& w);
/// Equivalent symmetrized split (head + middle + reflected head).
Rational script_e_split(long l1, long l2, long l3, const WeightSequence& w);

/// mu_{2j}(a,b,c): the coefficient of w_{2j} w_{2k-2j} in the Bernoulli
/// identity of the gauge-action family, by the raw double-sum formula.
/// Defined for 0 <= j <= floor(k/2), a+b+c = 2k-1.
Rational bcm_mu(long k, long j, long a, long b, long c);

/// Reduced closed form of mu_{2j}(a,b,c)/binom(2k,2j); needs c > 0 and
/// 1 <= j <= floor(k/2). Must agree with the raw route wherever defined.
Rational mu_reduced(long k, long j, long a, long b, long c);

/// Residual of -mu_0 w_{2k} = (mu_k/2) w_k^2 + sum_j mu_{2j} w_{2j} w_{2k-2j}
/// (the w_k^2 term only for k even). Zero with Bernoulli weights.
Rational residual_bcm(long k, long a, long b, long c, const WeightSequence& w);

struct MaincompResiduals {
  Rational mu0;        // the mu_0 recombination identity
  Rational mu_higher;  // sum of absolute residuals over j = 1..floor(k/2)
  bool ok() const { return mu0 == 0 && mu_higher == 0; }
};

/// The recombination identities c*mu°(a,b,c) + (b+1)*mu°(a,c-1,b+1) = 2k[...]
/// for mu_0 and every mu_{2j}; requires c > 0, a+b+c = 2k-1.
MaincompResiduals check_maincomp(long k, long a, long b, long c);

/// Residual of the linear-combination identity expressing the triple-sum
/// identity through two members of the Bernoulli-identity family:
///   cgen(l,l2,l3) - ( -(-1)^k/(2k)! ) [ (l/2k) bcm(l3-1,l2-1,l)
///                                     + (l2/2k) bcm(l3-1,l-1,l2) ].
/// An identity of bilinear forms: zero for arbitrary weights.
Rational check_ide(long l, long l2, long l3, const WeightSequence& w);

struct IdentityGridReport {
  std::string name;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  double elapsed_seconds = 0;
  bool ok() const { return violations.empty(); }
};

IdentityGridReport run_cgen_grid(long max_even_n, const Rational& tau);
IdentityGridReport run_bcm_grid(long max_k);
IdentityGridReport run_maincomp_grid(long max_k);
/// Random + indicator weight sequences over all admissible triples, k <= max_k.
IdentityGridReport run_ide_trials(long max_k, int random_trials, std::uint64_t seed);

/// Test hook: runs the cgen grid with one C coefficient corrupted, through
/// the direct route (expected to fail; exercises the violation path).
IdentityGridReport run_cgen_grid_corrupted(long max_even_n);

}  // namespace dqp

#endif
