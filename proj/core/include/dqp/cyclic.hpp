#ifndef DQP_CYCLIC_HPP
#define DQP_CYCLIC_HPP

#include <utility>
#include <vector>

#include "dqp/graded.hpp"

namespace dqp {

/// Word of mixed slots considered up to cyclic rotation. For the words used
/// here (odd functional count) every rotation has trivial Koszul sign, so
/// representatives are identified without signs.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(MixedTuple entries) : entries_(std::move(entries)) {}

  const MixedTuple& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  CyclicWord rotated(int offset) const;  // entry p moves to position p - offset (mod n)

  /// Equality of cyclic classes: some rotation matches exactly.
  bool cyclic_equal(const CyclicWord& other) const;

  bool all_dual() const {
    for (const auto& s : entries_)
      if (s.parity != 1) return false;
    return true;
  }

 private:
  MixedTuple entries_;
};

/// Rotation of a two-algebra-slot word into the normal form
/// <tf_1..tf_i, a, tg_1..tg_j, b> with j >= i (unique since i + j is odd).
struct CanonicalSplit {
  int i = 0;
  int j = 0;
  std::vector<DualElem> f_block;
  AlgElem a;
  std::vector<DualElem> g_block;
  AlgElem b;
  int rotation = 0;  // offset applied to reach the normal form

  CyclicWord reassemble() const;
};

/// Requires exactly two parity-0 entries and an odd number of parity-1
/// entries; throws std::invalid_argument otherwise.
CanonicalSplit canonicalize_cycle(const CyclicWord& word);

/// Formal rational combination of all-dual cyclic words.
struct WeightedWord {
  Rational coeff;
  CyclicWord word;
};
using FormalWordSum = std::vector<WeightedWord>;

/// The reduction step behind the even higher multiplications: absorbs the
/// two algebra entries of a canonical split into neighboring functionals via
/// the bimodule actions, producing C_{i,j} times four all-dual words (zero
/// when i = 0).
FormalWordSum script_m(const Algebra& alg, const CanonicalSplit& split, const Rational& c_ij);

/// Evaluation of an all-dual word: the product of all entries at 1_A.
/// Rotation-invariant. Throws on a non-dual entry.
Rational ev(const Algebra& alg, const CyclicWord& word);

}  // namespace dqp

#endif
