#ifndef DQP_GRADED_HPP
#define DQP_GRADED_HPP

#include <utility>
#include <vector>

#include "dqp/algebra.hpp"

namespace dqp {

/// One slot of a mixed tensor word over dA: parity 0 carries an element of A,
/// parity 1 a shifted functional in A^#[-1].
struct MixedSlot {
  int parity = 0;
  SparseVec value;

  static MixedSlot algebra(SparseVec v) { return {0, std::move(v)}; }
  static MixedSlot dual(SparseVec v) { return {1, std::move(v)}; }
  static MixedSlot algebra(const AlgElem& a) { return {0, a.v}; }
  static MixedSlot dual(const DualElem& f) { return {1, f.v}; }

  AlgElem as_alg() const { return {value}; }
  DualElem as_dual() const { return {value}; }
  PhiElem as_phi() const {
    return parity == 0 ? PhiElem{{value}, {}} : PhiElem{{}, {value}};
  }

  bool operator==(const MixedSlot&) const = default;
};

using MixedTuple = std::vector<MixedSlot>;

inline std::vector<int> parities(const MixedTuple& t) {
  std::vector<int> p;
  p.reserve(t.size());
  for (const auto& s : t) p.push_back(s.parity);
  return p;
}

/// Koszul sign of acting with sigma on a word with the given parities:
/// (-1)^{sum |v_i||v_j|} over pairs that sigma reorders. sigma[i] is the
/// image position of slot i.
int koszul_sign(const std::vector<int>& sigma, const std::vector<int>& slot_parities);

/// Applies sigma, sending the entry at position p to position sigma[p], and
/// returns the permuted tuple with its Koszul sign.
std::pair<MixedTuple, int> permute_graded(const std::vector<int>& sigma, const MixedTuple& tup);

/// Pairing of a tuple of functionals-with-parity against a tuple of
/// vectors-with-parity: the product of slotwise evaluations (zero whenever a
/// parity mismatches, since functionals only pair against their own degree).
Rational pair_tuples(const Algebra& alg, const MixedTuple& functionals, const MixedTuple& vectors);

}  // namespace dqp

#endif
