#include "dqp/stasheff.hpp"

#include <chrono>
#include <stdexcept>

#include "dqp/parallel.hpp"

namespace dqp {

namespace {
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool arity_live(int n) { return n == 2 || n == 3 || (n >= 4 && n % 2 == 0); }

std::vector<std::vector<int>> patterns_with_duals(int len, int duals) {
  std::vector<std::vector<int>> out;
  if (duals < 0 || duals > len) return out;
  std::vector<int> pat(len, 0);
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    int ones = 0;
    for (int p = 0; p < len; ++p) {
      pat[p] = (mask >> p) & 1;
      ones += pat[p];
    }
    if (ones == duals) out.push_back(pat);
  }
  return out;
}

MixedTuple tuple_from_indices(const Algebra& alg, const std::vector<int>& pat,
                              std::uint64_t flat) {
  MixedTuple tup;
  tup.reserve(pat.size());
  for (std::size_t p = 0; p < pat.size(); ++p) {
    int idx = static_cast<int>(flat % alg.dim());
    flat /= alg.dim();
    tup.push_back(pat[p] == 0 ? MixedSlot::algebra(alg.basis(idx))
                              : MixedSlot::dual(alg.dual_basis(idx)));
  }
  return tup;
}

std::uint64_t ipow_saturating(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}
}  // namespace

std::string format_tuple(const Algebra& alg, const MixedTuple& tup) {
  std::string s = "(";
  for (std::size_t p = 0; p < tup.size(); ++p) {
    if (p) s += ", ";
    if (tup[p].parity == 0)
      s += alg.format(tup[p].as_alg());
    else
      s += "t(" + alg.format(tup[p].as_dual()) + ")";
  }
  return s + ")";
}

Rational si_gamma(const AInftyStructure& st, int N, std::span<const MixedSlot> word) {
  if (static_cast<int>(word.size()) != N + 1)
    throw std::invalid_argument("SI(N) needs a word of N+1 slots");
  Rational total(0);
  int parity_prefix = 0;  // |x_1| + ... + |x_r|
  for (int r = 0; r <= N - 1; ++r) {
    if (r > 0) parity_prefix += word[r - 1].parity;
    for (int s = 1; r + s <= N; ++s) {
      const int t = N - r - s;
      const int outer = r + 1 + t;
      if (!arity_live(s) || !arity_live(outer)) continue;
      PhiElem inner = st.apply(s, word.subspan(r, s));
      if (inner.zero()) continue;
      const int sign_exp = r + s * t + s * parity_prefix;
      MixedTuple outer_word;
      outer_word.reserve(outer + 1);
      for (int p = 0; p < r; ++p) outer_word.push_back(word[p]);
      outer_word.emplace_back();  // placeholder for the inner value
      for (int p = r + s; p < N + 1; ++p) outer_word.push_back(word[p]);
      Rational term(0);
      if (!inner.alg.v.empty()) {
        outer_word[r] = MixedSlot::algebra(inner.alg);
        term += st.pair_apply(outer, outer_word);
      }
      if (!inner.dual.v.empty()) {
        outer_word[r] = MixedSlot::dual(inner.dual);
        term += st.pair_apply(outer, outer_word);
      }
      if (sign_exp % 2 != 0) term = -term;
      total += term;
    }
  }
  return total;
}

SparseVec random_sparse(int dim, std::uint64_t& state) {
  auto next = [&state]() {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  SparseVec v;
  for (int i = 0; i < dim; ++i) {
    long num = static_cast<long>(next() % 19) - 9;  // -9..9
    long den = static_cast<long>(next() % 3) + 1;   // 1..3
    v.add(i, frac(num, den));
  }
  return v;
}

std::vector<SIReport> verify_si(const AInftyStructure& st, const SIOptions& opts) {
  const Algebra& alg = st.algebra();
  std::vector<SIReport> reports;
  for (int N = 1; N <= opts.n_max; ++N) {
    auto t0 = Clock::now();
    SIReport rep;
    rep.N = N;
    const auto pats = patterns_with_duals(N + 1, N - 2);
    const std::uint64_t per_pattern = ipow_saturating(alg.dim(), N + 1);
    // budget heuristic in slot evaluations: patterns x (dim dA)^(N+1)
    std::uint64_t budget_cost = ipow_saturating(2ull * alg.dim(), N + 1);
    if (!pats.empty() && budget_cost > UINT64_MAX / pats.size())
      budget_cost = UINT64_MAX;
    else
      budget_cost *= pats.size();
    const SIMode mode = opts.mode.value_or(budget_cost <= opts.exhaustive_budget
                                               ? SIMode::Exhaustive
                                               : SIMode::Sampled);
    rep.mode = mode;

    if (mode == SIMode::Exhaustive) {
      const std::uint64_t total = pats.size() * per_pattern;
      const int jobs = resolve_jobs(opts.jobs);
      std::vector<std::vector<SIViolation>> found(jobs);
      std::vector<std::uint64_t> counted(jobs, 0);
      parallel_chunks(total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t g = begin; g < end; ++g) {
          const auto& pat = pats[g / per_pattern];
          MixedTuple tup = tuple_from_indices(alg, pat, g % per_pattern);
          Rational v = si_gamma(st, N, tup);
          ++counted[chunk];
          if (v != 0 && found[chunk].size() < opts.max_witnesses)
            found[chunk].push_back({tup, v});
        }
      });
      for (int c = 0; c < jobs; ++c) {
        rep.tuples_checked += counted[c];
        for (auto& v : found[c])
          if (rep.violations.size() < opts.max_witnesses) rep.violations.push_back(std::move(v));
      }
    } else {
      std::uint64_t state = opts.seed ^ (0x5151ull * N + 1);
      std::vector<MixedTuple> tuples;
      tuples.reserve(opts.samples);
      for (int i = 0; i < opts.samples && !pats.empty(); ++i) {
        auto split64 = [&state]() {
          state += 0x9e3779b97f4a7c15ULL;
          std::uint64_t z = state;
          z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
          z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
          return z ^ (z >> 31);
        };
        const auto& pat = pats[split64() % pats.size()];
        MixedTuple tup;
        tup.reserve(N + 1);
        for (int p = 0; p <= N; ++p) {
          SparseVec v = random_sparse(alg.dim(), state);
          tup.push_back(pat[p] == 0 ? MixedSlot::algebra(std::move(v))
                                    : MixedSlot::dual(std::move(v)));
        }
        tuples.push_back(std::move(tup));
      }
      const int jobs = resolve_jobs(opts.jobs);
      std::vector<std::vector<SIViolation>> found(jobs);
      std::vector<std::uint64_t> counted(jobs, 0);
      parallel_chunks(tuples.size(), jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t g = begin; g < end; ++g) {
          Rational v = si_gamma(st, N, tuples[g]);
          ++counted[chunk];
          if (v != 0 && found[chunk].size() < opts.max_witnesses)
            found[chunk].push_back({tuples[g], v});
        }
      });
      for (int c = 0; c < jobs; ++c) {
        rep.tuples_checked += counted[c];
        for (auto& v : found[c])
          if (rep.violations.size() < opts.max_witnesses) rep.violations.push_back(std::move(v));
      }
    }

    // wrong-degree spot check: those patterns vanish identically
    std::uint64_t state = opts.seed ^ (0xabcdull + N);
    for (int duals = 0; duals <= N + 1; ++duals) {
      if (duals == N - 2) continue;
      auto off = patterns_with_duals(N + 1, duals);
      if (off.empty()) continue;
      const auto& pat = off[state % off.size()];
      MixedTuple tup;
      for (int p = 0; p <= N; ++p) {
        SparseVec v = random_sparse(alg.dim(), state);
        tup.push_back(pat[p] == 0 ? MixedSlot::algebra(std::move(v))
                                  : MixedSlot::dual(std::move(v)));
      }
      ++rep.tuples_checked;
      Rational v = si_gamma(st, N, tup);
      if (v != 0 && rep.violations.size() < opts.max_witnesses) rep.violations.push_back({tup, v});
    }

    rep.elapsed_seconds = seconds_since(t0);
    reports.push_back(std::move(rep));
  }
  return reports;
}

CheckReport verify_cyclicity(const AInftyStructure& st, int n_max) {
  const Algebra& alg = st.algebra();
  CheckReport rep;
  rep.name = "cyclicity";
  auto t0 = Clock::now();
  for (int n = 2; n <= n_max; ++n) {
    if (!arity_live(n)) continue;
    std::vector<int> pat(n + 1);
    for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
      int total = 0;
      for (int p = 0; p <= n; ++p) {
        pat[p] = (mask >> p) & 1;
        total += pat[p];
      }
      std::vector<int> idx(n + 1, 0);
      while (true) {
        MixedTuple tup;
        tup.reserve(n + 1);
        for (int p = 0; p <= n; ++p)
          tup.push_back(pat[p] == 0 ? MixedSlot::algebra(alg.basis(idx[p]))
                                    : MixedSlot::dual(alg.dual_basis(idx[p])));
        ++rep.checked;
        Rational lhs = st.pair_apply(n, tup);
        MixedTuple rot;
        rot.reserve(n + 1);
        rot.push_back(tup.back());
        for (int p = 0; p < n; ++p) rot.push_back(tup[p]);
        Rational rhs = st.pair_apply(n, rot);
        const int sign_exp = n + pat[n] * (total - pat[n]);
        if (sign_exp % 2 != 0) rhs = -rhs;
        if (lhs != rhs)
          rep.violations.push_back("m" + std::to_string(n) + " at " + format_tuple(alg, tup) +
                                   ": " + rational_str(lhs) + " vs " + rational_str(rhs));
        if (!rep.violations.empty() && rep.violations.size() > 8) break;
        int p = n + 1;
        bool done = false;
        while (p > 0) {
          --p;
          if (++idx[p] < alg.dim()) break;
          idx[p] = 0;
          if (p == 0) done = true;
        }
        if (done) break;
      }
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

CheckReport verify_cyclic_reduction(const AInftyStructure& st, int N, int trials,
                                    std::uint64_t seed) {
  const Algebra& alg = st.algebra();
  CheckReport rep;
  rep.name = "cyclic_reduction_SI" + std::to_string(N);
  auto t0 = Clock::now();
  std::uint64_t state = seed ^ 0xfeedULL;
  auto split64 = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (int trial = 0; trial < trials; ++trial) {
    MixedTuple tup;
    int total = 0;
    for (int p = 0; p <= N; ++p) {
      int parity = (trial == 0) ? 1 : static_cast<int>(split64() % 2);  // include all-dual case
      total += parity;
      SparseVec v = random_sparse(alg.dim(), state);
      tup.push_back(parity == 0 ? MixedSlot::algebra(std::move(v)) : MixedSlot::dual(std::move(v)));
    }
    ++rep.checked;
    Rational lhs = si_gamma(st, N, tup);
    MixedTuple rot;
    rot.push_back(tup.back());
    for (int p = 0; p < N; ++p) rot.push_back(tup[p]);
    Rational rhs = si_gamma(st, N, rot);
    const int sign_exp = N + tup.back().parity * (total - tup.back().parity);
    if (sign_exp % 2 != 0) rhs = -rhs;
    if (lhs != rhs)
      rep.violations.push_back("SI(" + std::to_string(N) + ") rotation mismatch: " +
                               rational_str(lhs) + " vs " + rational_str(rhs));
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

CheckReport verify_pcy(const AInftyStructure& st, int n_max) {
  const Algebra& alg = st.algebra();
  CheckReport rep;
  rep.name = "pre_calabi_yau";
  auto t0 = Clock::now();
  const int d = alg.dim();

  // strict unit: (1,0) is a two-sided unit for m2
  for (int par = 0; par < 2; ++par)
    for (int i = 0; i < d; ++i) {
      MixedSlot x = par == 0 ? MixedSlot::algebra(alg.basis(i)) : MixedSlot::dual(alg.dual_basis(i));
      MixedSlot unit = MixedSlot::algebra(alg.unit());
      MixedTuple left{unit, x}, right{x, unit};
      ++rep.checked;
      if (!(st.apply(2, left) == x.as_phi() && st.apply(2, right) == x.as_phi()))
        rep.violations.push_back("(1,0) is not a unit at " + format_tuple(alg, {x}));
    }

  for (int n = 3; n <= n_max; ++n) {
    // odd arities above 3 are identically zero; their finiteness maps must
    // still agree (0 = 0), so only the basis sweeps are skipped for them
    const bool live = arity_live(n);
    if (live) {
      // m_n(A^{(x)n}) in A: vanishes identically for n != 2 by degree support
      std::vector<int> pat(n, 0);
      std::vector<int> idx(n, 0);
      while (true) {
        MixedTuple tup;
        for (int p = 0; p < n; ++p) tup.push_back(MixedSlot::algebra(alg.basis(idx[p])));
        ++rep.checked;
        PhiElem val = st.apply(n, tup);
        if (!val.dual.v.empty())
          rep.violations.push_back("m" + std::to_string(n) + " leaves A on " +
                                   format_tuple(alg, tup));
        int p = n;
        bool done = false;
        while (p > 0) {
          --p;
          if (++idx[p] < d) break;
          idx[p] = 0;
          if (p == 0) done = true;
        }
        if (done) break;
      }
    }
    // 1_A-normalization and g(m_n(...), 1_A) = 0 over the supported patterns
    for (int duals : {n - 2, n - 1}) {
      if (!live) break;
      for (const auto& pat : patterns_with_duals(n, duals)) {
        std::vector<int> idx(n, 0);
        while (true) {
          MixedTuple tup;
          for (int p = 0; p < n; ++p)
            tup.push_back(pat[p] == 0 ? MixedSlot::algebra(alg.basis(idx[p]))
                                      : MixedSlot::dual(alg.dual_basis(idx[p])));
          // normalization: any algebra slot set to the unit kills the value
          for (int p = 0; p < n; ++p) {
            if (pat[p] != 0) continue;
            MixedTuple norm = tup;
            norm[p] = MixedSlot::algebra(alg.unit());
            ++rep.checked;
            if (!st.apply(n, norm).zero())
              rep.violations.push_back("m" + std::to_string(n) + " not normalized at " +
                                       format_tuple(alg, norm));
          }
          // pairing against the unit vanishes
          MixedTuple word = tup;
          word.push_back(MixedSlot::algebra(alg.unit()));
          ++rep.checked;
          Rational val = st.pair_apply(n, word);
          if (val != 0)
            rep.violations.push_back("g(m" + std::to_string(n) + "(...), 1) != 0 at " +
                                     format_tuple(alg, tup));
          int p = n;
          bool done = false;
          while (p > 0) {
            --p;
            if (++idx[p] < d) break;
            idx[p] = 0;
            if (p == 0) done = true;
          }
          if (done) break;
        }
      }
    }
    // finiteness maps reproduce the pairing
    std::vector<int> fidx(n - 1, 0);
    for (int ell = 0; ell <= n - 2; ++ell) {
      for (int ia = 0; ia < d; ++ia)
        for (int ib = 0; ib < d; ++ib) {
          AlgElem a = alg.basis(ia), b = alg.basis(ib);
          TensorElem bmap = st.b_map(n, ell, a, b);
          std::fill(fidx.begin(), fidx.end(), 0);
          while (true) {
            std::vector<DualElem> fs;
            fs.reserve(n - 1);
            for (int p = 0; p < n - 1; ++p) fs.push_back(alg.dual_basis(fidx[p]));
            Rational lhs = bmap.apply(alg, fs);
            MixedTuple word;
            word.push_back(MixedSlot::algebra(a));
            for (int p = 0; p < ell; ++p) word.push_back(MixedSlot::dual(fs[p]));
            word.push_back(MixedSlot::algebra(b));
            for (int p = ell; p < n - 2; ++p) word.push_back(MixedSlot::dual(fs[p]));
            word.push_back(MixedSlot::dual(fs[n - 2]));
            ++rep.checked;
            Rational rhs = st.pair_apply(n, word);
            if (lhs != rhs)
              rep.violations.push_back("finiteness map mismatch at n=" + std::to_string(n) +
                                       " ell=" + std::to_string(ell) + " a=" + alg.format(a) +
                                       " b=" + alg.format(b) + ": " + rational_str(lhs) + " vs " +
                                       rational_str(rhs));
            int p = n - 1;
            bool done = false;
            while (p > 0) {
              --p;
              if (++fidx[p] < d) break;
              fidx[p] = 0;
              if (p == 0) done = true;
            }
            if (done) break;
          }
        }
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

}  // namespace dqp
