#ifndef DQP_STASHEFF_HPP
#define DQP_STASHEFF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqp/ainfty.hpp"

namespace dqp {

enum class SIMode { Exhaustive, Sampled };

struct SIViolation {
  MixedTuple tuple;
  Rational value;
};

struct SIReport {
  int N = 0;
  SIMode mode = SIMode::Exhaustive;
  std::uint64_t tuples_checked = 0;
  std::vector<SIViolation> violations;
  double elapsed_seconds = 0;
  bool ok() const { return violations.empty(); }
};

struct SIOptions {
  int n_max = 7;
  std::optional<SIMode> mode;  // unset: budget heuristic per N
  int samples = 1000;          // per N in sampled mode
  std::uint64_t seed = 0;
  int jobs = 0;                // 0: DQP_JOBS or hardware parallelism
  std::uint64_t exhaustive_budget = 100'000'000;  // slot evaluations
  std::size_t max_witnesses = 4;
};

struct CheckReport {
  std::string name;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  double elapsed_seconds = 0;
  bool ok() const { return violations.empty(); }
};

/// SI(N) against the pairing form on a word of N+1 pure-parity slots:
///   sum_{r+s+t=N} (-1)^{r+st+s(|x_1|+..+|x_r|)}
///     g(m_{r+1+t}(x_1..x_r, m_s(x_{r+1}..x_{r+s}), ..., x_N), x_0).
Rational si_gamma(const AInftyStructure& st, int N, std::span<const MixedSlot> word);

/// Checks SI(N) = 0 for N <= n_max. Exhaustive mode enumerates all basis
/// tuples over the degree-supported parity patterns (|pattern| = N-2);
/// sampled mode draws seeded random tuples with rational coefficients.
/// Wrong-degree patterns are spot-checked in both modes.
std::vector<SIReport> verify_si(const AInftyStructure& st, const SIOptions& opts);

/// Cyclic symmetry of the pairing: g(m_n(x_1..x_n), x_0) =
/// (-1)^{n+|x_0| sum|x_i|} g(m_n(x_0..x_{n-1}), x_n) on all basis words.
CheckReport verify_cyclicity(const AInftyStructure& st, int n_max);

/// Rotation identity for the whole SI sum on seeded random homogeneous
/// tuples: SI(N)(x_1..x_N,x_0) = (-1)^{N+|x_0| sum |x_i|} SI(N)(x_0..x_N).
CheckReport verify_cyclic_reduction(const AInftyStructure& st, int N, int trials,
                                    std::uint64_t seed);

/// Structure conditions: product closure and strict unit, normalization of
/// every higher map, g(m_n(..), 1_A) = 0, and the finiteness maps b_jbar
/// reproducing the pairing for 3 <= n <= n_max.
CheckReport verify_pcy(const AInftyStructure& st, int n_max);

/// Seeded random element with coefficients in {-9..9}/{1,2,3}.
SparseVec random_sparse(int dim, std::uint64_t& state);

std::string format_tuple(const Algebra& alg, const MixedTuple& tup);

}  // namespace dqp

#endif
