#include "cayley_ht/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cayley_ht {

namespace {

// SplitMix64 finalizer; decorrelates consecutive (seed, trial) pairs.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ULL) ^ (trial * 0xd1b54a32d192ed03ULL + 1));
}

// Unbiased draw from [0, bound): Lemire's multiply-shift with rejection.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
  unsigned __int128 product = static_cast<unsigned __int128>(gen()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(gen()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

struct Partial {
  std::uint64_t truncated = 0;
  std::uint64_t sum = 0;
  unsigned __int128 sum_squares = 0;
};

Partial run_trials(const SimConfig& config, long long target, std::uint64_t begin, std::uint64_t end) {
  const long long n = config.walk.modulus();
  const auto& steps = config.walk.steps();
  const auto degree = static_cast<std::uint64_t>(steps.size());
  Partial p;
  for (std::uint64_t t = begin; t < end; ++t) {
    std::mt19937_64 gen(trial_seed(config.seed, t));
    long long position = 0;
    std::uint64_t count = 0;
    while (position != target && count < config.max_steps_per_trial) {
      position += steps[bounded(gen, degree)];
      if (position >= n) position -= n;
      ++count;
    }
    if (position != target) {
      ++p.truncated;
      continue;
    }
    p.sum += count;
    p.sum_squares += static_cast<unsigned __int128>(count) * count;
  }
  return p;
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("CAYLEY_HT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SimStats simulate(const SimConfig& config, unsigned workers) {
  if (config.trials == 0) throw std::domain_error("simulate: trials must be at least 1");
  const long long n = config.walk.modulus();
  const long long target = ((config.target % n) + n) % n;
  if (target == 0) throw std::domain_error("simulate: target must be nonzero mod N");

  Partial total;
  if (!config.walk.reaches(target)) {
    // Every trial would run to the step cap without hitting the target.
    total.truncated = config.trials;
  } else {
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));
    std::vector<Partial> partials(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = config.trials / workers;
    const std::uint64_t extra = config.trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
      pool.emplace_back([&, w, begin, end] { partials[w] = run_trials(config, target, begin, end); });
      begin = end;
    }
    for (auto& th : pool) th.join();
    for (const Partial& p : partials) {
      total.truncated += p.truncated;
      total.sum += p.sum;
      total.sum_squares += p.sum_squares;
    }
  }

  SimStats stats;
  stats.trials = config.trials;
  stats.truncated_trials = total.truncated;
  const std::uint64_t done = stats.completed_trials();
  if (done == 0) {
    stats.mean = stats.variance = stats.std_error = std::numeric_limits<double>::quiet_NaN();
    return stats;
  }
  stats.mean_exact = Rational(Integer(total.sum), Integer(done));
  stats.mean = to_double(stats.mean_exact);
  if (done > 1) {
    // (n * sum x^2 - (sum x)^2) / (n (n - 1)), exact in integers.
    Integer sum_sq = Integer(static_cast<std::uint64_t>(total.sum_squares >> 64));
    sum_sq <<= 64;
    sum_sq += Integer(static_cast<std::uint64_t>(total.sum_squares));
    const Integer d(done);
    const Integer s(total.sum);
    const Rational var(Integer(d * sum_sq - s * s), Integer(d * (d - 1)));
    stats.variance = to_double(var);
  }
  stats.std_error = std::sqrt(stats.variance / static_cast<double>(done));
  return stats;
}

Comparison compare(const SimStats& stats, const Rational& exact, double z_max) {
  if (stats.truncated_trials != 0)
    throw std::runtime_error("compare: " + std::to_string(stats.truncated_trials) + " truncated trials");
  const double diff = to_double(Rational(stats.mean_exact - exact));
  Comparison c;
  if (diff == 0.0)
    c.z = 0.0;
  else if (stats.std_error == 0.0)
    c.z = diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  else
    c.z = diff / stats.std_error;
  c.consistent = std::abs(c.z) <= z_max;
  return c;
}

Comparison compare(const SimConfig& config, const Rational& exact, double z_max) {
  return compare(simulate(config), exact, z_max);
}

}  // namespace cayley_ht
