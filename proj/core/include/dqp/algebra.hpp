#ifndef DQP_ALGEBRA_HPP
#define DQP_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dqp/sparse.hpp"

namespace dqp {

/// Element of the algebra A, as coordinates over the chosen basis.
struct AlgElem {
  SparseVec v;
  bool operator==(const AlgElem&) const = default;
};

/// Functional on A (coordinates over the dual basis); stands for the shifted
/// element t f of A^#[-1], which lives in degree 1.
struct DualElem {
  SparseVec v;
  bool operator==(const DualElem&) const = default;
};

/// General element of dA = A + A^#[-1], split by degree.
struct PhiElem {
  AlgElem alg;
  DualElem dual;
  bool operator==(const PhiElem&) const = default;
  bool zero() const { return alg.v.empty() && dual.v.empty(); }
};

struct AlgebraDefect {
  enum class Kind { Associativity, LeftUnit, RightUnit, BadIndex };
  Kind kind;
  int i = -1, j = -1, k = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<AlgebraDefect> defects;
  std::uint64_t checked = 0;
  bool ok() const { return defects.empty(); }
};

/// Finite-dimensional unital associative algebra presented by structure
/// constants over a named basis. Immutable once validated.
class Algebra {
 public:
  Algebra(int dim, std::vector<std::string> basis_names, std::vector<SparseVec> table,
          SparseVec unit);

  static Algebra truncated_polynomial(int order);  // k[t]/(t^order), basis 1, t, ..., t^{order-1}

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const AlgElem& unit() const { return unit_; }
  const SparseVec& product_of_basis(int i, int j) const { return table_[i * dim_ + j]; }

  AlgElem basis(int i) const { return {SparseVec::basis(i)}; }
  DualElem dual_basis(int i) const { return {SparseVec::basis(i)}; }

  AlgElem mul(const AlgElem& a, const AlgElem& b) const;
  Rational eval(const DualElem& f, const AlgElem& a) const;
  Rational eval_at_unit(const DualElem& f) const { return eval(f, unit_); }

  /// Bimodule actions on shifted functionals, g(a.tf.b, c) = f(b c a):
  ///   act_left(a, f)  = a.tf : c -> f(c a)
  ///   act_right(f, b) = tf.b : c -> f(b c)
  DualElem act_left(const AlgElem& a, const DualElem& f) const;
  DualElem act_right(const DualElem& f, const AlgElem& b) const;
  DualElem dual_action(const AlgElem& a, const DualElem& f, const AlgElem& b) const;

  ValidationReport validate() const;

  std::string format(const AlgElem& a) const;
  std::string format(const DualElem& f) const;
  std::string format(const PhiElem& x) const;

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<SparseVec> table_;  // row-major dim x dim
  AlgElem unit_;
};

/// Graded product on dA: (a,tf).(a',tf') = (a a', tf.a' + a.tf'), unit (1,0).
PhiElem m2_phi(const Algebra& alg, const PhiElem& x, const PhiElem& y);

/// Natural degree -1 form: g(tf,a) = g(a,tf) = f(a), zero on A x A and on
/// A^#[-1] x A^#[-1].
Rational natural_form(const Algebra& alg, const PhiElem& x, const PhiElem& y);

}  // namespace dqp

#endif
