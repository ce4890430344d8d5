#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace semilab {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; the fixed rule for deriving child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of substream `index` under `master`. Used for Monte Carlo chunks and
// battery trials alike, so results never depend on the worker count.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x5851f42d4c957f2dULL));
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

// Worker count from SEMILAB_PARALLELISM, else 1.
std::size_t default_parallelism();

// Runs body(task) for task in [0, tasks) on up to `workers` threads. Tasks are
// handed out in contiguous blocks; body must only write task-indexed state.
void parallel_for(std::size_t tasks, std::size_t workers,
                  const std::function<void(std::size_t task, std::size_t worker)>& body);

// Number of workers parallel_for would actually spawn.
std::size_t effective_workers(std::size_t tasks, std::size_t workers);

}  // namespace semilab
