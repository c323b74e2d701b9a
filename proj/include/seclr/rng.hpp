#pragma once

#include <cstdint>
#include <random>

#include "seclr/u128.hpp"

namespace seclr {

// Seedable, splittable random source. split() derives an independent child
// stream from the parent's seed and a key (never from draw position), so
// per-institution / per-iteration streams are reproducible no matter how the
// simulator schedules work. Gaussian and uniform doubles are generated from
// explicit 53-bit draws rather than std:: distributions, which are
// implementation-defined; the same seed yields the same bytes everywhere.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);

  SplitRng split(std::uint64_t k1, std::uint64_t k2 = 0) const;

  std::uint64_t next_u64();

  // Uniform on [0, n), n >= 1. Rejection sampled, no modulo bias.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform field element in [0, p).
  u128 field_uniform(u128 p);

  // Uniform on [0, 1) with 53 bits of precision.
  double uniform01();
  double uniform(double lo, double hi);

  double gaussian(double mu, double sigma);

  bool bernoulli(double prob);

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace seclr
