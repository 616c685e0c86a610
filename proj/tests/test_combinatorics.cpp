#include <doctest.h>

#include "dqp/combinatorics.hpp"

using namespace dqp;

namespace {
// independent oracle: B_n = sum_k 1/(k+1) sum_j (-1)^j C(k,j) j^n (B_1 = -1/2)
Rational bernoulli_double_sum(long n) {
  Rational total(0);
  for (long k = 0; k <= n; ++k) {
    Rational inner(0);
    for (long j = 0; j <= k; ++j) {
      Integer jn;
      mpz_ui_pow_ui(jn.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
      if (j == 0 && n == 0) jn = 1;
      Rational term = binomial(k, j) * Rational(jn);
      inner += (j % 2 == 0) ? term : -term;
    }
    total += inner / Rational(k + 1);
  }
  return total;
}
}  // namespace

TEST_CASE("binomial: conventions and small values") {
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(2, 5) == 0);
  // negative upper argument follows the product formula
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 3) == -4);
}

TEST_CASE("binomial: absorption and reflection identities") {
  for (long x = -6; x <= 8; ++x)
    for (long d = -3; d <= 9; ++d) {
      CHECK(Rational(d) * binomial(x, d) == Rational(x - d + 1) * binomial(x, d - 1));
      CHECK(Rational(x - d) * binomial(x, d) == Rational(x) * binomial(x - 1, d));
      CHECK(binomial(x, d) == binomial(x - 1, d - 1) + binomial(x - 1, d));
    }
  for (long x = 0; x <= 9; ++x)
    for (long d = -2; d <= x + 2; ++d) CHECK(binomial(x, d) == binomial(x, x - d));
}

TEST_CASE("binomial: telescoping alternating sums") {
  auto alt = [](long d, Rational t) -> Rational { return ((d % 2) + 2) % 2 == 0 ? t : Rational(-t); };
  for (long x = -5; x <= 7; ++x)
    for (long ep = -3; ep <= 5; ++ep)
      for (long e = ep; e <= ep + 6; ++e) {
        Rational lhs(0);
        for (long d = ep; d <= e; ++d) lhs += alt(d, binomial(x, d));
        CHECK(lhs == alt(ep, binomial(x - 1, ep - 1)) + alt(e, binomial(x - 1, e)));
      }
}

TEST_CASE("bernoulli: values, convention, and the double-sum oracle") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(5) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (long n = 0; n <= 20; ++n) CHECK(bernoulli(n) == bernoulli_double_sum(n));
  for (long m = 1; m <= 12; ++m) CHECK(bernoulli(2 * m + 1) == 0);
}

TEST_CASE("c_coeff: anchored values") {
  for (const char* t : {"0", "1", "2", "-3/5"}) {
    Rational tau = parse_rational(t);
    CHECK(c_coeff(1, 2, tau) == tau / 12);
  }
  CHECK(c_coeff(1, 4, Rational(1)) == Rational(1, 720));
  CHECK(c_coeff(2, 3, Rational(1)) == Rational(1, 240));
  // tau scaling: degree (i+j-1)/2
  CHECK(c_coeff(2, 3, Rational(2)) == frac(4, 240));
}

TEST_CASE("c_coeff: symmetry and the parity precondition") {
  Rational tau(3, 7);
  for (long i = 1; i <= 9; ++i)
    for (long j = 1; j <= 9; ++j) {
      if ((i + j) % 2 == 0) continue;
      CHECK(c_coeff(i, j, tau) == c_coeff(j, i, tau));
    }
  CHECK_THROWS_AS(c_coeff(1, 3, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(c_coeff(2, 2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(c_coeff(0, 1, Rational(1)), std::invalid_argument);
}

TEST_CASE("c_coeff table: prefilled entries and the hook") {
  CCoeffTable tab = CCoeffTable::build(Rational(1), 9);
  CHECK(tab.at(1, 2) == Rational(1, 12));
  CHECK(tab.at(2, 1) == Rational(1, 12));
  CHECK(tab.at(4, 5) == c_coeff(4, 5, Rational(1)));
  CHECK_THROWS_AS(tab.at(5, 6), std::out_of_range);
  tab.corrupt(1, 2, Rational(1));
  CHECK(tab.at(1, 2) == Rational(13, 12));
}

TEST_CASE("rational parsing: exactness and rejection") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(rational_str(Rational(-3, 2)) == "-3/2");
  CHECK(rational_str(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}
