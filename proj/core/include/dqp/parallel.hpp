#ifndef DQP_PARALLEL_HPP
#define DQP_PARALLEL_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace dqp {

/// Worker count: explicit request, else DQP_JOBS, else hardware concurrency.
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DQP_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Splits [0, count) into contiguous chunks, one worker per chunk batch.
/// Results must be written to per-chunk storage; exact arithmetic plus a
/// deterministic merge keeps reports schedule-independent.
inline void parallel_chunks(std::uint64_t count, int jobs,
                            const std::function<void(int chunk, std::uint64_t begin,
                                                     std::uint64_t end)>& body) {
  jobs = resolve_jobs(jobs);
  if (count == 0) return;
  if (jobs <= 1 || count == 1) {
    body(0, 0, count);
    return;
  }
  const int chunks = jobs;
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  const std::uint64_t step = (count + chunks - 1) / chunks;
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * step;
    if (begin >= count) break;
    const std::uint64_t end = std::min<std::uint64_t>(begin + step, count);
    workers.emplace_back([&, c, begin, end] { body(c, begin, end); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace dqp

#endif
