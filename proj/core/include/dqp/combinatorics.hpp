#ifndef DQP_COMBINATORICS_HPP
#define DQP_COMBINATORICS_HPP

#include <map>
#include <utility>
#include <vector>

#include "dqp/rational.hpp"

namespace dqp {

/// Binomial coefficient by the product formula, defined for every integer
/// upper argument: C(x,d) = prod_{i=0}^{d-1}(x-i)/d! for d >= 0, and 0 for
/// d < 0. Integer-valued on integer x, returned exact.
Rational binomial(long x, long d);

Integer factorial(unsigned long n);

/// n-th Bernoulli number, convention B_1 = -1/2. Memoized; call
/// warm_bernoulli() before sharing across threads.
const Rational& bernoulli(std::size_t n);

/// Fills the Bernoulli memo up to index `bound` so later lookups are
/// lock-free reads of an immutable table.
void warm_bernoulli(std::size_t bound);

/// Coefficient C_{i,j} weighting the even higher multiplications:
///   C(i+j-2, i-1) * (-1)^{1+(i+j-1)/2} * B_{i+j-1}/(i+j-1)! * tau^{(i+j-1)/2}.
/// Requires i, j >= 1 with i+j odd; anything else is a caller bug.
Rational c_coeff(long i, long j, const Rational& tau);

/// Precomputed symmetric table of C_{i,j} for i+j <= bound, all i+j odd.
class CCoeffTable {
 public:
  CCoeffTable() = default;
  static CCoeffTable build(const Rational& tau, long bound);

  const Rational& at(long i, long j) const;
  const Rational& tau() const { return tau_; }
  long bound() const { return bound_; }

  /// Test hook: corrupts one entry in place (negative controls only).
  void corrupt(long i, long j, const Rational& delta);

 private:
  Rational tau_{0};
  long bound_ = 0;
  std::map<std::pair<long, long>, Rational> entries_;
};

}  // namespace dqp

#endif
