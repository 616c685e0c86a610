#ifndef DQP_TENSOR_HPP
#define DQP_TENSOR_HPP

#include <map>
#include <vector>

#include "dqp/algebra.hpp"

namespace dqp {

/// Sparse order-n tensor over the algebra basis with exact coefficients;
/// houses values in A (x) ... (x) A.
class TensorElem {
 public:
  using Index = std::vector<int>;

  explicit TensorElem(int order) : order_(order) {}

  int order() const { return order_; }
  bool zero() const { return entries_.empty(); }
  const std::map<Index, Rational>& entries() const { return entries_; }

  void add(const Index& idx, const Rational& value);
  void add_scaled(const TensorElem& other, const Rational& scale);
  TensorElem& operator+=(const TensorElem& other);
  TensorElem& operator*=(const Rational& s);
  TensorElem operator-() const;
  bool operator==(const TensorElem& other) const {
    return order_ == other.order_ && entries_ == other.entries_;
  }

  /// Pure tensor a_1 (x) ... (x) a_n, expanded over the basis.
  static TensorElem outer(const std::vector<AlgElem>& factors);

  /// Outer bimodule actions: act_left multiplies the first factor on the
  /// left by a, act_right multiplies the last factor on the right by b.
  TensorElem act_left(const Algebra& alg, const AlgElem& a) const;
  TensorElem act_right(const Algebra& alg, const AlgElem& b) const;

  /// Cyclic rotation sending slot 1 to slot 2 (no signs; A sits in degree 0).
  TensorElem cycled() const;
  TensorElem flipped() const;  // order 2 only

  /// Contraction against a tuple of functionals, one per factor.
  Rational apply(const Algebra& alg, const std::vector<DualElem>& fs) const;

  std::string format(const Algebra& alg) const;

 private:
  int order_;
  std::map<Index, Rational> entries_;
};

}  // namespace dqp

#endif
