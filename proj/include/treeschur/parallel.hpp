#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treeschur {

// --jobs resolution: explicit value wins, then TREESCHUR_JOBS, then the
// OpenMP default (1 when built without OpenMP).
int resolve_jobs(int requested);

// fn(i) summed over i in [0, count) with operator+=. The range is split into
// `jobs` contiguous chunks whose partial sums are combined in chunk order:
// for a fixed (count, jobs) the result is reproducible regardless of
// scheduling, and for exact scalars it is identical for every jobs value.
template <class T, class Fn>
T indexed_sum(std::uint64_t count, int jobs, const T& zero, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  if (count == 0) return zero;
  const std::uint64_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count);
  std::vector<T> partial(chunks, zero);
#ifdef _OPENMP
#pragma omp parallel for num_threads(static_cast<int>(chunks)) schedule(static, 1)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t lo = count * c / chunks;
    const std::uint64_t hi = count * (c + 1) / chunks;
    T acc = zero;
    for (std::uint64_t i = lo; i < hi; ++i) acc += fn(i);
    partial[static_cast<std::size_t>(c)] = std::move(acc);
  }
  T total = zero;
  for (auto& p : partial) total += p;
  return total;
}

// Serial reference for the kernel above.
template <class T, class Fn>
T indexed_sum_serial(std::uint64_t count, const T& zero, Fn&& fn) {
  T total = zero;
  for (std::uint64_t i = 0; i < count; ++i) total += fn(i);
  return total;
}

}  // namespace treeschur
