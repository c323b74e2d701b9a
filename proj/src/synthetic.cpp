#include "seclr/synthetic.hpp"

#include "seclr/logistic.hpp"
#include "seclr/rng.hpp"

namespace seclr {

void SyntheticSpec::validate() const {
  require(d >= 2, Errc::invalid_spec,
          "d must be >= 2 (intercept plus at least one covariate)");
  require(!sizes.empty(), Errc::invalid_spec, "at least one institution");
  for (std::size_t n : sizes) {
    require(n >= 1, Errc::invalid_spec, "every institution needs >= 1 record");
  }
  require(sigma > 0.0, Errc::invalid_spec, "sigma must be positive");
  require(beta_min <= beta_max, Errc::invalid_spec, "empty coefficient range");
}

std::pair<std::vector<LocalDataset>, Eigen::VectorXd> generate_synthetic(
    const SyntheticSpec& spec) {
  spec.validate();
  SplitRng root(spec.seed);

  SplitRng beta_rng = root.split(0);
  Eigen::VectorXd beta(spec.d);
  for (unsigned k = 0; k < spec.d; ++k) {
    beta(k) = beta_rng.uniform(spec.beta_min, spec.beta_max);
  }

  std::vector<LocalDataset> datasets;
  datasets.reserve(spec.sizes.size());
  for (std::size_t j = 0; j < spec.sizes.size(); ++j) {
    // Institution streams are split by index, so regenerating any one
    // institution alone yields the same rows.
    SplitRng rng = root.split(j + 1);
    Eigen::Index n = static_cast<Eigen::Index>(spec.sizes[j]);
    LocalDataset ds;
    ds.institution_id = "inst_" + std::to_string(j + 1);
    ds.X.resize(n, spec.d);
    ds.X.col(0).setOnes();
    for (Eigen::Index i = 0; i < n; ++i) {
      for (unsigned k = 1; k < spec.d; ++k) {
        ds.X(i, k) = rng.gaussian(spec.mu, spec.sigma);
      }
    }
    ds.y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      double p = sigmoid(ds.X.row(i).dot(beta));
      ds.y(i) = rng.bernoulli(p) ? 1.0 : 0.0;
    }
    datasets.push_back(std::move(ds));
  }
  return {std::move(datasets), std::move(beta)};
}

}  // namespace seclr
