#pragma once

#include <cstdint>
#include <random>

namespace owm {

/// What a substream is used for. Values are part of the seeding contract and
/// must never be renumbered.
enum class StreamPurpose : std::uint64_t {
  wind = 1,
  wave = 2,
  price = 3,
  failures = 4,
  scheduler = 5,
  optimizer = 6,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the substream of one (sample, purpose) pair.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t sample_index, StreamPurpose purpose);

/// Portable random stream: mt19937_64 output is fixed by the standard and all
/// transforms below are implemented here, so draws are identical across
/// compilers and standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t master_seed, std::uint64_t sample_index, StreamPurpose purpose)
      : engine_(derive_seed(master_seed, sample_index, purpose)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n);
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }
  double weibull(double shape, double scale);
  /// Number of failures before the first success of Bernoulli(p), 0 < p < 1.
  std::uint64_t geometric(double p);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace owm
