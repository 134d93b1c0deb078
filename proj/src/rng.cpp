#include "owm/rng.hpp"

#include <cmath>
#include <numbers>

namespace owm {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t sample_index, StreamPurpose purpose) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ sample_index);
  h = splitmix64(h ^ static_cast<std::uint64_t>(purpose));
  return h;
}

double RandomStream::uniform() {
  // 53 random bits, shifted off zero
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RandomStream::index(std::uint64_t n) {
  // rejection sampling keeps the result unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double RandomStream::weibull(double shape, double scale) {
  return scale * std::pow(-std::log(uniform()), 1.0 / shape);
}

std::uint64_t RandomStream::geometric(double p) {
  const double g = std::floor(std::log(uniform()) / std::log1p(-p));
  if (!(g < 1.8e19)) return UINT64_MAX;
  return static_cast<std::uint64_t>(g);
}

}  // namespace owm
