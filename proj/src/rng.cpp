#include "seclr/rng.hpp"

#include <cmath>

#include "seclr/errors.hpp"

namespace seclr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

SplitRng SplitRng::split(std::uint64_t k1, std::uint64_t k2) const {
  std::uint64_t child = splitmix64(seed_ ^ splitmix64(k1 + 0x632be59bd9b4e019ULL));
  child = splitmix64(child ^ splitmix64(k2 + 0x9e6c63d0676a9a99ULL));
  return SplitRng(child);
}

std::uint64_t SplitRng::next_u64() { return eng_(); }

std::uint64_t SplitRng::bounded(std::uint64_t n) {
  require(n >= 1, Errc::invalid_params, "bounded() needs n >= 1");
  if (n == 1) return 0;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

u128 SplitRng::field_uniform(u128 p) {
  int bits = bit_width_u128(p - 1);
  u128 mask = bits >= 128 ? ~static_cast<u128>(0)
                          : (static_cast<u128>(1) << bits) - 1;
  u128 v;
  do {
    v = (static_cast<u128>(next_u64()) << 64) | next_u64();
    v &= mask;
  } while (v >= p);
  return v;
}

double SplitRng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double SplitRng::gaussian(double mu, double sigma) {
  if (have_spare_) {
    have_spare_ = false;
    return mu + sigma * spare_;
  }
  // Box-Muller on explicit uniforms.
  double u1;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return mu + sigma * r * std::cos(theta);
}

bool SplitRng::bernoulli(double prob) { return uniform01() < prob; }

}  // namespace seclr
