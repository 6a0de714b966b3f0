#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace cdens {

// Resolves a worker-count request: positive values are taken as-is, zero
// means "use the hardware concurrency" (at least one).
inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Splits [0, n_items) into contiguous ranges and calls fn(lo, hi, out) once
// per range, possibly across several threads.  `results` holds one Local per
// range, ordered by range index, so a caller scanning it front to back finds
// the lowest-index witness first no matter how many workers ran.  The range
// layout depends only on n_items and the resolved worker count's ceiling of
// four ranges per worker, and every range is processed fully, so output is
// deterministic for a fixed (n_items, workers) pair and identical across
// worker counts whenever the caller's merge only uses range order.
template <typename Fn, typename Local>
void parallel_ranges(std::uint64_t n_items, int workers, Fn&& fn,
                     std::vector<Local>& results) {
  results.clear();
  if (n_items == 0) return;
  const int w = resolve_workers(workers);

  // A few ranges per worker evens out uneven work without hurting the
  // single-worker case.
  std::uint64_t ranges = static_cast<std::uint64_t>(w) * 4;
  if (ranges > n_items) ranges = n_items;
  if (ranges == 0) ranges = 1;
  results.resize(static_cast<std::size_t>(ranges));

  const std::uint64_t step = n_items / ranges;
  const std::uint64_t extra = n_items % ranges;
  const auto bounds = [step, extra](std::uint64_t i) {
    const std::uint64_t lo = i * step + (i < extra ? i : extra);
    const std::uint64_t hi = lo + step + (i < extra ? 1 : 0);
    return std::pair<std::uint64_t, std::uint64_t>(lo, hi);
  };

  if (w == 1 || ranges == 1) {
    for (std::uint64_t i = 0; i < ranges; ++i) {
      const auto [lo, hi] = bounds(i);
      fn(lo, hi, results[static_cast<std::size_t>(i)]);
    }
    return;
  }

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> errored{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  const auto nthreads =
      static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(w), ranges));
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= ranges) return;
        try {
          const auto [lo, hi] = bounds(i);
          fn(lo, hi, results[static_cast<std::size_t>(i)]);
        } catch (...) {
          if (!errored.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (errored.load()) std::rethrow_exception(error);
}

}  // namespace cdens
