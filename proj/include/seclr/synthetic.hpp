#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seclr/dataset.hpp"

namespace seclr {

// Synthetic study layout: true coefficients drawn once from
// Uniform[beta_min, beta_max]^d, covariates N(mu, sigma^2) per institution,
// responses Bernoulli(sigmoid(beta . x)). d counts the intercept column.
struct SyntheticSpec {
  unsigned d = 6;
  std::vector<std::size_t> sizes;  // N_j per institution
  double mu = 0.0;
  double sigma = 1.0;
  double beta_min = -1.0;
  double beta_max = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

std::pair<std::vector<LocalDataset>, Eigen::VectorXd> generate_synthetic(
    const SyntheticSpec& spec);

}  // namespace seclr
