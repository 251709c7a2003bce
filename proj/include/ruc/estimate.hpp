#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace ruc {

// Monte Carlo summary: sample mean, standard error of the mean, trial count,
// and the master seed the trials were derived from.
struct EnsembleEstimate {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  long trials = 0;
  std::uint64_t master_seed = 0;
};

inline EnsembleEstimate summarize(std::span<const double> values,
                                  std::uint64_t master_seed) {
  EnsembleEstimate e;
  e.trials = static_cast<long>(values.size());
  e.master_seed = master_seed;
  if (e.trials == 0) return e;
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / static_cast<double>(e.trials);
  if (e.trials > 1) {
    double ss = 0.0;
    for (double v : values) {
      const double d = v - e.mean;
      ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(e.trials - 1));
    e.stderr_of_mean = sd / std::sqrt(static_cast<double>(e.trials));
  }
  return e;
}

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, n). Work is sharded in contiguous chunks; callers
// write results into per-index slots so the outcome is independent of the
// worker count.
inline void parallel_for(long n, int workers,
                         const std::function<void(long)>& fn) {
  workers = resolve_workers(workers);
  if (n <= 0) return;
  if (workers <= 1 || n == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  const long nthreads = std::min<long>(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (long t = 0; t < nthreads; ++t) {
    const long lo = n * t / nthreads;
    const long hi = n * (t + 1) / nthreads;
    pool.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace ruc
