#pragma once

#include <Eigen/Dense>
#include <vector>

#include "seclr/dataset.hpp"

namespace seclr {

// Probabilities are clamped to [kProbClamp, 1 - kProbClamp] so the deviance
// and the working weights stay finite under separation.
inline constexpr double kProbClamp = 1e-12;

// 1 / (1 + e^-z), stable branch form, clamped.
double sigmoid(double z);

// Per-row success probabilities and IRLS weights p_i (1 - p_i) at beta.
struct WorkingSet {
  Eigen::VectorXd p;
  Eigen::VectorXd w_diag;
};

WorkingSet compute_working_set(const LocalDataset& data,
                               const Eigen::VectorXd& beta);

// X^T W X, the unpenalized local Hessian contribution (stored positive).
Eigen::MatrixXd local_hessian(const LocalDataset& data, const WorkingSet& ws);

// X^T (y - p), the unpenalized local score.
Eigen::VectorXd local_gradient(const LocalDataset& data, const WorkingSet& ws);

// -2 sum_i [y_i log p_i + (1 - y_i) log(1 - p_i)].
double local_deviance(const LocalDataset& data, const WorkingSet& ws);

// One institution's contribution to the global Newton state.
struct SummaryBundle {
  Eigen::MatrixXd hessian;   // d x d, symmetric PSD
  Eigen::VectorXd gradient;  // d
  double deviance = 0.0;
};

SummaryBundle local_summaries(const LocalDataset& data,
                              const Eigen::VectorXd& beta);

// beta_old + (H_sum + lambda I)^-1 (g_sum - lambda beta_old), solved by LDLT
// factorization. When penalize_intercept is false the first coefficient is
// excluded from both penalty terms.
Eigen::VectorXd newton_step(const Eigen::MatrixXd& h_sum,
                            const Eigen::VectorXd& g_sum,
                            const Eigen::VectorXd& beta_old, double lambda,
                            bool penalize_intercept = true);

// True iff the last two deviances differ by less than tol.
bool check_convergence(const std::vector<double>& deviance_history,
                       double tol);

struct ModelState {
  Eigen::VectorXd beta;
  unsigned iteration = 0;
  std::vector<double> deviance_history;
  bool converged = false;
};

// Pools all rows and iterates the penalized Newton update from beta = 0.
// The gold-standard comparison path for the federated protocol; returns
// converged = false (never throws) when max_iter is exhausted.
ModelState centralized_fit(const std::vector<LocalDataset>& datasets,
                           double lambda, double tol, unsigned max_iter,
                           bool penalize_intercept = true);

}  // namespace seclr
