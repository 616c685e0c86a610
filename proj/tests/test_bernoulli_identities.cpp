#include <doctest.h>

#include "dqp/bernoulli_identities.hpp"

using namespace dqp;

TEST_CASE("triple-sum identity: the first instance by hand") {
  // (1,1,3): C_{2,3} + 2 C_{1,4} = C_{1,2}^2, i.e. 1/240 + 1/360 = 1/144
  WeightSequence w = WeightSequence::bernoulli_defaults(8);
  CHECK(c_coeff(2, 3, Rational(1)) + 2 * c_coeff(1, 4, Rational(1)) == frac(1, 144));
  CHECK(residual_cgen(1, 1, 3, Rational(1), w) == 0);
  CHECK(residual_cgen_direct(1, 1, 3, Rational(1), w) == 0);
}

TEST_CASE("triple-sum identity: permutation invariance for arbitrary weights") {
  std::uint64_t state = 11;
  auto rnd = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return static_cast<long>(z % 19) - 9;
  };
  for (long n : {6L, 8L, 10L}) {
    WeightSequence w;
    for (long idx = 2; idx <= n - 2; idx += 2) w.set(idx, frac(rnd(), 1 + (rnd() + 9) % 4));
    for (long l1 = 1; l1 <= n - 3; ++l1)
      for (long l2 = 1; l1 + l2 <= n - 2; ++l2) {
        const long l3 = n - 1 - l1 - l2;
        if (l3 < 1) continue;
        Rational base = residual_cgen_direct(l1, l2, l3, Rational(1), w);
        CHECK(residual_cgen_direct(l2, l1, l3, Rational(1), w) == base);
        CHECK(residual_cgen_direct(l3, l2, l1, Rational(1), w) == base);
        CHECK(residual_cgen_direct(l2, l3, l1, Rational(1), w) == base);
        // the bilinear normal form computes the same residual
        CHECK(residual_cgen(l1, l2, l3, Rational(1), w) == base);
      }
  }
}

TEST_CASE("triple-sum identity: full Bernoulli grid to n = 14 in-unit") {
  auto rep = run_cgen_grid(14, Rational(1));
  INFO((rep.violations.empty() ? std::string() : rep.violations.front()));
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
  // tau scales out as tau^k
  WeightSequence w = WeightSequence::bernoulli_defaults(16);
  CHECK(residual_cgen(3, 5, 3, frac(2, 3), w) == 0);
}

TEST_CASE("Bernoulli-identity family: grid, odd-k middle term, mu_0 closed form") {
  auto rep = run_bcm_grid(8);
  INFO((rep.violations.empty() ? std::string() : rep.violations.front()));
  CHECK(rep.ok());
  // mu_0 via the closed form
  for (long k = 2; k <= 6; ++k)
    for (long a = 0; a <= 2 * k - 1; ++a)
      for (long b = 0; a + b <= 2 * k - 1; ++b) {
        const long c = 2 * k - 1 - a - b;
        Rational want = binomial(2 * k, c);
        if (c % 2 != 0) want = -want;
        Rational sub = binomial(2 * k, a);
        if (a % 2 != 0) sub = -sub;
        CHECK(bcm_mu(k, 0, a, b, c) == want - sub);
      }
  // for odd k the dropped middle term equals including it with weight zero:
  // both give the same residual since B_k = 0
  WeightSequence w = WeightSequence::bernoulli_defaults(10);
  CHECK(residual_bcm(5, 3, 3, 3, w) == 0);
}

TEST_CASE("reduced mu agrees with the raw double sum wherever defined") {
  for (long k = 2; k <= 6; ++k)
    for (long j = 1; j <= k / 2; ++j)
      for (long a = 0; a <= 2 * k - 1; ++a)
        for (long b = 0; a + b <= 2 * k - 1; ++b) {
          const long c = 2 * k - 1 - a - b;
          if (c == 0) continue;
          Rational raw = bcm_mu(k, j, a, b, c);
          raw /= binomial(2 * k, 2 * j);
          CHECK(mu_reduced(k, j, a, b, c) == raw);
        }
  CHECK_THROWS_AS(mu_reduced(4, 1, 3, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(mu_reduced(4, 3, 1, 2, 4), std::invalid_argument);
}

TEST_CASE("reduced mu: symmetric endpoints and the boundary index") {
  // a = c: the antisymmetric block cancels pairwise; spot-check equality with raw
  for (long k = 3; k <= 6; ++k)
    for (long a = 1; 2 * a <= 2 * k - 2; ++a) {
      const long b = 2 * k - 1 - 2 * a;
      if (b < 0) continue;
      for (long j = 1; j <= k / 2; ++j) {
        Rational raw = bcm_mu(k, j, a, b, a);
        raw /= binomial(2 * k, 2 * j);
        CHECK(mu_reduced(k, j, a, b, a) == raw);
      }
    }
  // boundary j = k/2 for even k is the coefficient entering the w_k^2/2 term
  for (long k : {4L, 6L, 8L}) {
    const long j = k / 2;
    for (long a = 0; a <= 2 * k - 1; ++a) {
      const long b = 2 * k - 1 - a - 1;
      if (b < 0) continue;
      Rational raw = bcm_mu(k, j, a, b, 1);
      raw /= binomial(2 * k, 2 * j);
      CHECK(mu_reduced(k, j, a, b, 1) == raw);
    }
  }
}

TEST_CASE("recombination identities on the grid, including the edges") {
  auto rep = run_maincomp_grid(8);
  INFO((rep.violations.empty() ? std::string() : rep.violations.front()));
  CHECK(rep.ok());
  CHECK(check_maincomp(5, 4, 4, 1).ok());  // c = 1 edge
  CHECK(check_maincomp(5, 4, 0, 5).ok());  // b = 0 edge
  CHECK_THROWS_AS(check_maincomp(5, 4, 5, 0), std::invalid_argument);
}

TEST_CASE("linear combination: Bernoulli, indicators, random weights") {
  WeightSequence bern = WeightSequence::bernoulli_defaults(12);
  CHECK(check_ide(1, 1, 5, bern) == 0);
  CHECK(check_ide(3, 3, 3, bern) == 0);
  // indicator weights make the check coefficient-by-coefficient
  for (long idx = 2; idx <= 8; idx += 2) {
    WeightSequence w = WeightSequence::zeros(8);
    w.set(idx, Rational(1));
    for (long l1 = 1; l1 <= 7; ++l1)
      for (long l2 = 1; l1 + l2 <= 8; ++l2) {
        const long l3 = 9 - l1 - l2;  // k = 4 triples
        if (l3 < 1) continue;
        CHECK(check_ide(l1, l2, l3, w) == 0);
      }
  }
  auto rep = run_ide_trials(6, 25, 2024);
  INFO((rep.violations.empty() ? std::string() : rep.violations.front()));
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}

TEST_CASE("generic quadratic sum: full range vs split, endpoint symmetry, degenerate case") {
  std::uint64_t state = 31;
  auto rnd = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return static_cast<long>(z % 19) - 9;
  };
  for (long n : {6L, 8L, 10L, 12L}) {
    const long k = (n - 2) / 2;
    WeightSequence w;
    for (long idx = 2; idx <= 2 * k; idx += 2) w.set(idx, frac(rnd(), 1 + (rnd() + 9) % 3));
    for (long l1 = 1; l1 <= n - 3; ++l1)
      for (long l2 = 1; l1 + l2 <= n - 2; ++l2) {
        const long l3 = n - 1 - l1 - l2;
        if (l3 < 1) continue;
        CHECK(script_e(l1, l2, l3, w) == script_e_split(l1, l2, l3, w));
        CHECK(script_e(l1, l2, l3, w) == script_e(l3, l2, l1, w));
      }
  }
  // l2 = 1 with l1, l3 odd vanishes term by term
  WeightSequence bern = WeightSequence::bernoulli_defaults(12);
  CHECK(script_e(3, 1, 5, bern) == 0);
  CHECK(script_e(1, 1, 3, bern) == 0);
}

TEST_CASE("corrupted coefficient control fails loudly") {
  auto rep = run_cgen_grid_corrupted(10);
  CHECK(!rep.ok());
  CHECK(!rep.violations.empty());
}
