#include "dqp/bernoulli_identities.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

namespace dqp {

namespace {
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

long parity_i(long x) { return x % 2 == 0 ? 1 : 0; }  // 1 on even arguments

Rational weighted_c(long i, long j, const Rational& tau, const WeightSequence& w) {
  if (i < 1 || j < 1 || (i + j) % 2 == 0)
    throw std::invalid_argument("weighted C needs i, j >= 1 with i + j odd");
  const long ell = i + j - 1;
  Rational out = binomial(i + j - 2, i - 1);
  out *= w.at(ell);
  out /= Rational(factorial(static_cast<unsigned long>(ell)));
  if ((1 + ell / 2) % 2 != 0) out = -out;
  out *= pow_rational(tau, static_cast<unsigned long>(ell / 2));
  return out;
}

using CFn = std::function<Rational(long, long)>;

Rational cgen_direct_generic(long l1, long l2, long l3, const CFn& C) {
  auto sgn = [](long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };
  Rational lhs = sgn(l1 + 1) * C(l1, l2 + l3) + sgn(l3 + 1) * C(l3, l2 + l1) +
                 sgn(l2 + 1) * C(l2, l1 + l3);
  Rational s1(0), s2(0), s3(0);
  for (long j = 1; j <= l2 / 2 + parity_i(l1) * parity_i(l3); ++j)
    s1 += C(l1, 2 * j - parity_i(l1)) * C(l3, l2 - 2 * j + 1 + parity_i(l1));
  for (long j = 1; j <= l3 / 2 + parity_i(l1) * parity_i(l2); ++j)
    s2 += C(l2, 2 * j - parity_i(l2)) * C(l1, l3 - 2 * j + 1 + parity_i(l2));
  for (long j = 1; j <= l1 / 2 + parity_i(l2) * parity_i(l3); ++j)
    s3 += C(l3, 2 * j - parity_i(l3)) * C(l2, l1 - 2 * j + 1 + parity_i(l3));
  Rational rhs = sgn(l2 + 1) * s1 + sgn(l3 + 1) * s2 + sgn(l1 + 1) * s3;
  return lhs - rhs;
}

void require_admissible(long l1, long l2, long l3) {
  if (l1 < 1 || l2 < 1 || l3 < 1 || (l1 + l2 + l3) % 2 == 0 || l1 + l2 + l3 < 5)
    throw std::invalid_argument("triple must be positive with odd sum >= 5");
}
}  // namespace

WeightSequence WeightSequence::bernoulli_defaults(long max_index) {
  WeightSequence w;
  warm_bernoulli(static_cast<std::size_t>(max_index));
  for (long m = 2; m <= max_index; m += 2) w.set(m, bernoulli(static_cast<std::size_t>(m)));
  return w;
}

WeightSequence WeightSequence::zeros(long max_index) {
  WeightSequence w;
  for (long m = 2; m <= max_index; m += 2) w.set(m, Rational(0));
  return w;
}

Rational residual_cgen_direct(long l1, long l2, long l3, const Rational& tau,
                              const WeightSequence& w) {
  require_admissible(l1, l2, l3);
  return cgen_direct_generic(l1, l2, l3,
                             [&](long i, long j) { return weighted_c(i, j, tau, w); });
}

Rational script_e(long l1, long l2, long l3, const WeightSequence& w) {
  const long k = (l1 + l2 + l3 - 1) / 2;
  Rational acc(0);
  for (long i = 1; i <= k - 1; ++i) {
    Rational term = binomial(2 * i - 1, l1 - 1) * binomial(2 * k - 2 * i - 1, l3 - 1);
    if (term == 0) continue;
    term *= w.at(2 * i);
    term *= w.at(2 * k - 2 * i);
    term /= Rational(factorial(static_cast<unsigned long>(2 * i)));
    term /= Rational(factorial(static_cast<unsigned long>(2 * k - 2 * i)));
    acc += term;
  }
  return k % 2 == 0 ? acc : -acc;
}

namespace {
// sum_{i=1}^{floor((k-1)/2)} [C(2i-1,p-1)C(2k-2i-1,q-1) + (p <-> q)] w_{2i} w_{2k-2i} /
// ((2i)!(2k-2i)!), plus the middle w_k^2 term when k is even. Unsigned; k passed explicitly.
Rational symmetrized_pair_sum(long p, long q, long k, const WeightSequence& w) {
  Rational acc(0);
  for (long i = 1; i <= (k - 1) / 2; ++i) {
    Rational pair = binomial(2 * i - 1, p - 1) * binomial(2 * k - 2 * i - 1, q - 1) +
                    binomial(2 * i - 1, q - 1) * binomial(2 * k - 2 * i - 1, p - 1);
    if (pair == 0) continue;
    pair *= w.at(2 * i);
    pair *= w.at(2 * k - 2 * i);
    pair /= Rational(factorial(static_cast<unsigned long>(2 * i)));
    pair /= Rational(factorial(static_cast<unsigned long>(2 * k - 2 * i)));
    acc += pair;
  }
  if (k % 2 == 0) {
    Rational mid = binomial(k - 1, p - 1) * binomial(k - 1, q - 1);
    mid *= w.at(k) * w.at(k);
    mid /= Rational(factorial(static_cast<unsigned long>(k)) *
                    factorial(static_cast<unsigned long>(k)));
    acc += mid;
  }
  return acc;
}
}  // namespace

Rational script_e_split(long l1, long l2, long l3, const WeightSequence& w) {
  const long k = (l1 + l2 + l3 - 1) / 2;
  Rational acc = symmetrized_pair_sum(l1, l3, k, w);
  return k % 2 == 0 ? acc : -acc;
}

Rational residual_cgen(long l1, long l2, long l3, const Rational& tau, const WeightSequence& w) {
  require_admissible(l1, l2, l3);
  const long k = (l1 + l2 + l3 - 1) / 2;
  const long ls[3] = {l1, l2, l3};
  Rational lhs(0);
  for (long lp : ls) {
    Rational term = binomial(2 * k - 1, lp - 1);
    if (lp % 2 != 0) term = -term;
    lhs += term;
  }
  lhs *= w.at(2 * k);
  lhs /= Rational(factorial(static_cast<unsigned long>(2 * k)));
  Rational rhs(0);
  for (int p = 0; p < 3; ++p) {
    const long lq = ls[p == 0 ? 1 : 0];
    const long lr = ls[p == 2 ? 1 : 2];
    Rational acc = symmetrized_pair_sum(lq, lr, k, w);
    if ((ls[p] + 1) % 2 != 0) acc = -acc;
    rhs += acc;
  }
  Rational out = lhs - rhs;
  if (k % 2 != 0) out = -out;
  out *= pow_rational(tau, static_cast<unsigned long>(k));
  return out;
}

Rational bcm_mu(long k, long j, long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != 2 * k - 1)
    throw std::invalid_argument("bcm_mu needs a+b+c = 2k-1, nonnegative");
  if (j < 0 || j > k / 2) throw std::invalid_argument("bcm_mu needs 0 <= j <= k/2");
  auto alt_sum = [](long x, long lo, long hi) {
    Rational s(0);
    for (long d = lo; d <= hi; ++d) {
      Rational t = binomial(x, d);
      if (d % 2 != 0) t = -t;
      s += t;
    }
    return s;
  };
  const long m = 2 * j, mm = 2 * k - 2 * j;
  auto sgn = [](long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };
  Rational t1 = sgn(c) * binomial(mm, c) * alt_sum(m, std::max(0L, m - b), std::min(a, m));
  Rational t2 = sgn(c) * binomial(m, c) * alt_sum(mm, std::max(0L, mm - b), std::min(a, mm));
  Rational t3 = sgn(a) * binomial(mm, a) * alt_sum(m, std::max(0L, m - b), std::min(c, m));
  Rational t4 = sgn(a) * binomial(m, a) * alt_sum(mm, std::max(0L, mm - b), std::min(c, mm));
  Rational out = binomial(2 * k, m);
  out *= (t1 + t2 - t3 - t4);
  return out;
}

Rational mu_reduced(long k, long j, long a, long b, long c) {
  if (c <= 0) throw std::invalid_argument("reduced form needs c > 0; use the raw route at c = 0");
  if (j < 1 || j > k / 2) throw std::invalid_argument("mu_reduced needs 1 <= j <= k/2");
  const long m = 2 * j, mm = 2 * k - 2 * j;
  auto sgn = [](long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };
  Rational s1 = binomial(mm - 1, c - 1) *
                    (frac(mm, c) * binomial(m - 1, a) - frac(mm - c, c) * binomial(m, a)) +
                binomial(m - 1, c - 1) *
                    (frac(m, c) * binomial(mm - 1, a) - frac(m - c, c) * binomial(mm, a));
  s1 *= sgn(a + c);
  Rational s2 = binomial(mm - 1, c - 1) * binomial(m - 1, b) * frac(mm, c) +
                binomial(m - 1, c - 1) * binomial(mm - 1, b) * frac(m, c);
  s2 *= sgn(b + c);
  Rational s3 = binomial(mm - 1, b) * binomial(m, a) + binomial(m - 1, b) * binomial(mm, a);
  s3 *= sgn(a + b);
  Rational out = s1 + s2 - s3;
  out.canonicalize();
  return out;
}

Rational residual_bcm(long k, long a, long b, long c, const WeightSequence& w) {
  if (k < 2) throw std::invalid_argument("residual_bcm needs k >= 2");
  Rational r = -(bcm_mu(k, 0, a, b, c) * w.at(2 * k));
  if (k % 2 == 0) {
    Rational mid = bcm_mu(k, k / 2, a, b, c);
    mid *= w.at(k) * w.at(k);
    mid /= 2;
    r -= mid;
  }
  for (long j = 1; j <= (k - 1) / 2; ++j) {
    Rational term = bcm_mu(k, j, a, b, c);
    term *= w.at(2 * j);
    term *= w.at(2 * k - 2 * j);
    r -= term;
  }
  return r;
}

MaincompResiduals check_maincomp(long k, long a, long b, long c) {
  if (c <= 0 || a + b + c != 2 * k - 1)
    throw std::invalid_argument("check_maincomp needs c > 0, a+b+c = 2k-1");
  auto sgn = [](long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };
  auto mu0 = [&](long aa, long bb, long cc) -> Rational {
    (void)bb;
    return sgn(cc) * binomial(2 * k, cc) - sgn(aa) * binomial(2 * k, aa);
  };
  MaincompResiduals out;
  out.mu0 = Rational(c) * mu0(a, b, c) + Rational(b + 1) * mu0(a, c - 1, b + 1) -
            Rational(2 * k) * (sgn(c) * binomial(2 * k - 1, c - 1) -
                               sgn(b) * binomial(2 * k - 1, b) - sgn(a) * binomial(2 * k - 1, a));
  out.mu_higher = 0;
  for (long j = 1; j <= k / 2; ++j) {
    const long m = 2 * j, mm = 2 * k - 2 * j;
    auto muo = [&](long aa, long bb, long cc) {
      Rational v = bcm_mu(k, j, aa, bb, cc);
      v /= binomial(2 * k, m);
      return v;
    };
    Rational rhs = sgn(a + c) * (binomial(mm - 1, c - 1) * binomial(m - 1, a) +
                                 binomial(m - 1, c - 1) * binomial(mm - 1, a)) +
                   sgn(b + c) * (binomial(mm - 1, c - 1) * binomial(m - 1, b) +
                                 binomial(m - 1, c - 1) * binomial(mm - 1, b)) -
                   sgn(a + b) * (binomial(mm - 1, b) * binomial(m - 1, a) +
                                 binomial(m - 1, b) * binomial(mm - 1, a));
    rhs *= Rational(2 * k);
    Rational res = Rational(c) * muo(a, b, c) + Rational(b + 1) * muo(a, c - 1, b + 1) - rhs;
    out.mu_higher += abs(res);
  }
  return out;
}

Rational check_ide(long l, long l2, long l3, const WeightSequence& w) {
  require_admissible(l, l2, l3);
  const long k = (l + l2 + l3 - 1) / 2;
  if (k < 2) throw std::invalid_argument("check_ide needs k >= 2");
  Rational lhs = residual_cgen(l, l2, l3, Rational(1), w);
  Rational comb = frac(l, 2 * k) * residual_bcm(k, l3 - 1, l2 - 1, l, w) +
                  frac(l2, 2 * k) * residual_bcm(k, l3 - 1, l - 1, l2, w);
  comb /= Rational(factorial(static_cast<unsigned long>(2 * k)));
  if (k % 2 == 0) comb = -comb;
  return lhs - comb;
}

namespace {
template <typename Fn>
IdentityGridReport grid_over_triples(const std::string& name, long max_even_n, Fn&& residual) {
  IdentityGridReport rep;
  rep.name = name;
  auto t0 = Clock::now();
  for (long n = 6; n <= max_even_n; n += 2)
    for (long l1 = 1; l1 <= n - 3; ++l1)
      for (long l2 = 1; l2 + l1 <= n - 2; ++l2) {
        const long l3 = n - 1 - l1 - l2;
        if (l3 < 1) continue;
        ++rep.checked;
        Rational r = residual(l1, l2, l3);
        if (r != 0 && rep.violations.size() < 8)
          rep.violations.push_back("(" + std::to_string(l1) + "," + std::to_string(l2) + "," +
                                   std::to_string(l3) + ") -> " + rational_str(r));
      }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}
}  // namespace

IdentityGridReport run_cgen_grid(long max_even_n, const Rational& tau) {
  WeightSequence w = WeightSequence::bernoulli_defaults(max_even_n);
  auto rep = grid_over_triples("cgen", max_even_n, [&](long l1, long l2, long l3) {
    Rational bilinear = residual_cgen(l1, l2, l3, tau, w);
    Rational direct = residual_cgen_direct(l1, l2, l3, tau, w);
    if (bilinear != direct) return Rational(1);  // route disagreement is itself a failure
    return bilinear;
  });
  return rep;
}

IdentityGridReport run_cgen_grid_corrupted(long max_even_n) {
  WeightSequence w = WeightSequence::bernoulli_defaults(max_even_n);
  const Rational tau(1);
  auto corrupted = [&](long i, long j) {
    Rational c = weighted_c(i, j, tau, w);
    if ((i == 1 && j == 2) || (i == 2 && j == 1)) c += 1;
    return c;
  };
  IdentityGridReport rep;
  rep.name = "cgen_corrupted";
  auto t0 = Clock::now();
  for (long n = 6; n <= max_even_n; n += 2)
    for (long l1 = 1; l1 <= n - 3; ++l1)
      for (long l2 = 1; l2 + l1 <= n - 2; ++l2) {
        const long l3 = n - 1 - l1 - l2;
        if (l3 < 1) continue;
        ++rep.checked;
        Rational r = cgen_direct_generic(l1, l2, l3, corrupted);
        if (r != 0 && rep.violations.size() < 8)
          rep.violations.push_back("(" + std::to_string(l1) + "," + std::to_string(l2) + "," +
                                   std::to_string(l3) + ") -> " + rational_str(r));
      }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

IdentityGridReport run_bcm_grid(long max_k) {
  IdentityGridReport rep;
  rep.name = "bcm";
  auto t0 = Clock::now();
  WeightSequence w = WeightSequence::bernoulli_defaults(2 * max_k);
  for (long k = 2; k <= max_k; ++k)
    for (long a = 0; a <= 2 * k - 1; ++a)
      for (long b = 0; a + b <= 2 * k - 1; ++b) {
        const long c = 2 * k - 1 - a - b;
        ++rep.checked;
        Rational r = residual_bcm(k, a, b, c, w);
        if (r != 0 && rep.violations.size() < 8)
          rep.violations.push_back("k=" + std::to_string(k) + " (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ") -> " +
                                   rational_str(r));
      }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

IdentityGridReport run_maincomp_grid(long max_k) {
  IdentityGridReport rep;
  rep.name = "maincomp";
  auto t0 = Clock::now();
  for (long k = 2; k <= max_k; ++k)
    for (long a = 0; a <= 2 * k - 1; ++a)
      for (long b = 0; a + b <= 2 * k - 1; ++b) {
        const long c = 2 * k - 1 - a - b;
        if (c == 0) continue;
        ++rep.checked;
        MaincompResiduals res = check_maincomp(k, a, b, c);
        if (!res.ok() && rep.violations.size() < 8)
          rep.violations.push_back("k=" + std::to_string(k) + " (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
      }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

IdentityGridReport run_ide_trials(long max_k, int random_trials, std::uint64_t seed) {
  IdentityGridReport rep;
  rep.name = "ide";
  auto t0 = Clock::now();
  auto run_all_triples = [&](const WeightSequence& w, const std::string& tag) {
    for (long k = 2; k <= max_k; ++k) {
      const long n = 2 * k + 2;
      for (long l1 = 1; l1 <= n - 3; ++l1)
        for (long l2 = 1; l1 + l2 <= n - 2; ++l2) {
          const long l3 = n - 1 - l1 - l2;
          if (l3 < 1) continue;
          ++rep.checked;
          Rational r = check_ide(l1, l2, l3, w);
          if (r != 0 && rep.violations.size() < 8)
            rep.violations.push_back(tag + " (" + std::to_string(l1) + "," + std::to_string(l2) +
                                     "," + std::to_string(l3) + ") -> " + rational_str(r));
        }
    }
  };
  // Bernoulli weights: the classical case
  run_all_triples(WeightSequence::bernoulli_defaults(2 * max_k), "bernoulli");
  // indicator sequences: one weight at a time
  for (long idx = 2; idx <= 2 * max_k; idx += 2) {
    WeightSequence w = WeightSequence::zeros(2 * max_k);
    w.set(idx, Rational(1));
    run_all_triples(w, "indicator_" + std::to_string(idx));
  }
  // seeded random sequences
  std::uint64_t state = seed ^ 0x1de5ULL;
  auto split64 = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (int trial = 0; trial < random_trials; ++trial) {
    WeightSequence w;
    for (long idx = 2; idx <= 2 * max_k; idx += 2) {
      long num = static_cast<long>(split64() % 19) - 9;
      long den = static_cast<long>(split64() % 5) + 1;
      w.set(idx, frac(num, den));
    }
    run_all_triples(w, "random_" + std::to_string(trial));
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

}  // namespace dqp
