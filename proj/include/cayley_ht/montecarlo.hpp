#pragma once

#include "cayley_ht/circulant.hpp"
#include "cayley_ht/rational.hpp"

#include <cstdint>

namespace cayley_ht {

struct SimConfig {
  CirculantWalk walk;
  long long target = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_steps_per_trial = 1'000'000'000;
};

/// Sample statistics over the trials that reached the target. Truncated
/// trials (those that hit max_steps_per_trial) are counted but excluded.
struct SimStats {
  std::uint64_t trials = 0;
  std::uint64_t truncated_trials = 0;
  Rational mean_exact;  // total steps / completed trials
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
  double std_error = 0.0;  // sqrt(variance / completed trials)

  std::uint64_t completed_trials() const { return trials - truncated_trials; }
};

/// Simulates `config.trials` independent walks from 0 until they first hit
/// `config.target`. Trial t draws from a generator seeded by (seed, t) alone
/// and the reduction is over integers, so the output is bit-identical for
/// any worker count. `workers == 0` picks the default (CAYLEY_HT_THREADS, or
/// the hardware concurrency).
///
/// Throws std::domain_error if trials == 0 or the target is 0 mod N.
SimStats simulate(const SimConfig& config, unsigned workers = 0);

inline constexpr double kDefaultZMax = 4.0;

struct Comparison {
  bool consistent = false;
  double z = 0.0;
};

/// consistent iff |mean - exact| <= z_max * std_error. The difference is
/// taken exactly before dividing. Throws std::runtime_error for runs with
/// truncated trials.
Comparison compare(const SimStats& stats, const Rational& exact, double z_max = kDefaultZMax);

/// simulate(config) followed by compare.
Comparison compare(const SimConfig& config, const Rational& exact, double z_max = kDefaultZMax);

/// Worker count used when simulate is called with workers == 0.
unsigned default_workers();

}  // namespace cayley_ht
