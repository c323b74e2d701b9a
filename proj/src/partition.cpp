#include "seclr/partition.hpp"

#include <numeric>

#include "seclr/rng.hpp"

namespace seclr {

std::vector<LocalDataset> partition_horizontal(const LocalDataset& pooled,
                                               std::size_t s,
                                               std::uint64_t seed) {
  pooled.validate();
  std::size_t n = static_cast<std::size_t>(pooled.rows());
  require(s >= 1, Errc::invalid_params, "need at least one partition");
  require(s <= n, Errc::too_many_partitions,
          "cannot split " + std::to_string(n) + " rows into " +
              std::to_string(s) + " institutions");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitRng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = rng.bounded(i + 1);
    std::swap(order[i], order[j]);
  }

  std::vector<LocalDataset> parts(s);
  std::size_t base = n / s;
  std::size_t extra = n % s;  // first `extra` parts get one more row
  std::size_t at = 0;
  for (std::size_t j = 0; j < s; ++j) {
    std::size_t nj = base + (j < extra ? 1 : 0);
    LocalDataset& part = parts[j];
    part.institution_id = "part_" + std::to_string(j + 1);
    part.X.resize(static_cast<Eigen::Index>(nj), pooled.X.cols());
    part.y.resize(static_cast<Eigen::Index>(nj));
    for (std::size_t i = 0; i < nj; ++i) {
      part.X.row(static_cast<Eigen::Index>(i)) =
          pooled.X.row(static_cast<Eigen::Index>(order[at]));
      part.y(static_cast<Eigen::Index>(i)) =
          pooled.y(static_cast<Eigen::Index>(order[at]));
      ++at;
    }
  }
  return parts;
}

}  // namespace seclr
