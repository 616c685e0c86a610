#include "dqp/graded.hpp"

#include <stdexcept>

namespace dqp {

int koszul_sign(const std::vector<int>& sigma, const std::vector<int>& slot_parities) {
  const std::size_t n = sigma.size();
  if (slot_parities.size() != n) throw std::invalid_argument("permutation size mismatch");
  // epsilon(sigma, v) = sum over i<j with sigma^{-1}(i) > sigma^{-1}(j) of
  // |v_{sigma^{-1}(i)}| |v_{sigma^{-1}(j)}|; equivalently over pairs p<q that
  // sigma order-reverses.
  int e = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (sigma[p] > sigma[q]) e += slot_parities[p] * slot_parities[q];
  return e % 2 == 0 ? 1 : -1;
}

std::pair<MixedTuple, int> permute_graded(const std::vector<int>& sigma, const MixedTuple& tup) {
  const std::size_t n = tup.size();
  if (sigma.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int img : sigma) {
    if (img < 0 || static_cast<std::size_t>(img) >= n || seen[img])
      throw std::invalid_argument("not a permutation");
    seen[img] = true;
  }
  MixedTuple out(n);
  for (std::size_t p = 0; p < n; ++p) out[sigma[p]] = tup[p];
  return {std::move(out), koszul_sign(sigma, parities(tup))};
}

Rational pair_tuples(const Algebra&, const MixedTuple& functionals, const MixedTuple& vectors) {
  if (functionals.size() != vectors.size())
    throw std::invalid_argument("tuple length mismatch");
  Rational out(1);
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    if (functionals[i].parity != vectors[i].parity) return Rational(0);
    Rational s(0);
    for (const auto& [k, c] : vectors[i].value.entries())
      s += functionals[i].value.coeff(k) * c;
    out *= s;
    if (out == 0) return out;
  }
  return out;
}

}  // namespace dqp
