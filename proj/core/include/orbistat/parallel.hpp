#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace orbistat {

// Worker count: ORBISTAT_THREADS if set and positive, else hardware slots.
inline unsigned worker_count() {
  if (const char* env = std::getenv("ORBISTAT_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1u;
}

// Splits [lo, hi) into contiguous chunks, one worker per chunk, and merges the
// per-chunk accumulators in index order.  Deterministic: the result does not
// depend on scheduling, only on the partition, which is fixed by the worker
// count.  fn(lo, hi, acc) must only touch its own accumulator.
template <typename Acc, typename Fn, typename Merge>
Acc parallel_range(std::int64_t lo, std::int64_t hi, Acc init, Fn fn, Merge merge) {
  std::int64_t span = hi - lo;
  if (span <= 0) return init;
  unsigned n = worker_count();
  if (static_cast<std::int64_t>(n) > span) n = static_cast<unsigned>(span);
  if (n <= 1) {
    Acc acc = init;
    fn(lo, hi, acc);
    return acc;
  }
  std::vector<Acc> accs(n, init);
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    std::int64_t a = lo + span * i / n;
    std::int64_t b = lo + span * (i + 1) / n;
    pool.emplace_back([&, a, b, i] { fn(a, b, accs[i]); });
  }
  for (auto& t : pool) t.join();
  Acc out = init;
  for (auto& a : accs) merge(out, a);
  return out;
}

}  // namespace orbistat
