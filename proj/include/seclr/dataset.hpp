#pragma once

#include <Eigen/Dense>
#include <string>

#include "seclr/errors.hpp"

namespace seclr {

// One institution's private rows. X includes the intercept column (all
// ones, first) when produced by the data toolkit; y entries are 0 or 1.
// Never serialized by the protocol layer.
struct LocalDataset {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  std::string institution_id;

  Eigen::Index rows() const { return X.rows(); }
  Eigen::Index features() const { return X.cols(); }

  void validate() const {
    require(X.rows() >= 1 && X.cols() >= 1, Errc::invalid_spec,
            "dataset must have at least one row and one feature");
    require(X.rows() == y.size(), Errc::dimension_mismatch,
            "X and y row counts differ");
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      require(y(i) == 0.0 || y(i) == 1.0, Errc::non_binary_response,
              "response entries must be 0 or 1");
    }
  }
};

}  // namespace seclr
