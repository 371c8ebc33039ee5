#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace polycurv {

/// Default seed used by the CLI and by library calls that omit a config,
/// so that default runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t batch = 65536;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Runs `fn(rng) -> double` over cfg.samples draws, split into batches seeded
/// with (seed + batch index). Deterministic for a fixed (seed, samples, batch)
/// regardless of evaluation order.
template <class F>
Estimate mc_run(const McConfig& cfg, F&& fn) {
  const std::uint64_t n = cfg.samples;
  const std::uint64_t bs = cfg.batch == 0 ? n : cfg.batch;
  double sum = 0.0, sumsq = 0.0;
  std::uint64_t done = 0, bi = 0;
  while (done < n) {
    const std::uint64_t m = std::min(bs, n - done);
    std::mt19937_64 rng(cfg.seed + bi);
    double bsum = 0.0, bsumsq = 0.0;
    for (std::uint64_t i = 0; i < m; ++i) {
      const double v = fn(rng);
      bsum += v;
      bsumsq += v * v;
    }
    sum += bsum;
    sumsq += bsumsq;
    done += m;
    ++bi;
  }
  Estimate e;
  e.samples = n;
  e.seed = cfg.seed;
  e.value = sum / static_cast<double>(n);
  if (n > 1) {
    const double var =
        std::max(0.0, (sumsq / static_cast<double>(n) - e.value * e.value)) *
        static_cast<double>(n) / static_cast<double>(n - 1);
    e.std_error = std::sqrt(var / static_cast<double>(n));
  }
  return e;
}

}  // namespace polycurv
