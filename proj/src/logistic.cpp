#include "seclr/logistic.hpp"

#include <algorithm>
#include <cmath>

namespace seclr {

double sigmoid(double z) {
  double v;
  if (z >= 0.0) {
    v = 1.0 / (1.0 + std::exp(-z));
  } else {
    double e = std::exp(z);
    v = e / (1.0 + e);
  }
  return std::clamp(v, kProbClamp, 1.0 - kProbClamp);
}

WorkingSet compute_working_set(const LocalDataset& data,
                               const Eigen::VectorXd& beta) {
  require(beta.size() == data.features(), Errc::dimension_mismatch,
          "beta dimension does not match the dataset");
  WorkingSet ws;
  ws.p.resize(data.rows());
  ws.w_diag.resize(data.rows());
  Eigen::VectorXd z = data.X * beta;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    double pi = sigmoid(z(i));
    ws.p(i) = pi;
    ws.w_diag(i) = pi * (1.0 - pi);
  }
  return ws;
}

Eigen::MatrixXd local_hessian(const LocalDataset& data, const WorkingSet& ws) {
  require(ws.p.size() == data.rows(), Errc::dimension_mismatch,
          "working set does not match the dataset");
  // X^T W X via a weighted copy; symmetrize to kill rounding skew.
  Eigen::MatrixXd wx = ws.w_diag.asDiagonal() * data.X;
  Eigen::MatrixXd h = data.X.transpose() * wx;
  return ((h + h.transpose()) * 0.5).eval();
}

Eigen::VectorXd local_gradient(const LocalDataset& data, const WorkingSet& ws) {
  require(ws.p.size() == data.rows(), Errc::dimension_mismatch,
          "working set does not match the dataset");
  return data.X.transpose() * (data.y - ws.p);
}

double local_deviance(const LocalDataset& data, const WorkingSet& ws) {
  double ll = 0.0;
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    double pi = ws.p(i);
    ll += data.y(i) * std::log(pi) + (1.0 - data.y(i)) * std::log(1.0 - pi);
  }
  return -2.0 * ll;
}

SummaryBundle local_summaries(const LocalDataset& data,
                              const Eigen::VectorXd& beta) {
  WorkingSet ws = compute_working_set(data, beta);
  return {local_hessian(data, ws), local_gradient(data, ws),
          local_deviance(data, ws)};
}

Eigen::VectorXd newton_step(const Eigen::MatrixXd& h_sum,
                            const Eigen::VectorXd& g_sum,
                            const Eigen::VectorXd& beta_old, double lambda,
                            bool penalize_intercept) {
  require(h_sum.rows() == h_sum.cols() && h_sum.rows() == g_sum.size() &&
              g_sum.size() == beta_old.size(),
          Errc::dimension_mismatch, "newton_step inputs disagree on d");
  Eigen::Index d = g_sum.size();
  Eigen::VectorXd penalty = Eigen::VectorXd::Constant(d, lambda);
  if (!penalize_intercept && d > 0) penalty(0) = 0.0;

  Eigen::MatrixXd a = h_sum;
  a.diagonal() += penalty;
  Eigen::VectorXd rhs = g_sum - penalty.cwiseProduct(beta_old);

  Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
  require(ldlt.info() == Eigen::Success && ldlt.isPositive(),
          Errc::singular_system,
          "H + lambda*I is not positive definite (collinear covariates or "
          "separation with lambda = 0)");
  return beta_old + ldlt.solve(rhs);
}

bool check_convergence(const std::vector<double>& deviance_history,
                       double tol) {
  require(tol > 0.0, Errc::invalid_params, "tolerance must be positive");
  std::size_t n = deviance_history.size();
  if (n < 2) return false;
  return std::fabs(deviance_history[n - 1] - deviance_history[n - 2]) < tol;
}

ModelState centralized_fit(const std::vector<LocalDataset>& datasets,
                           double lambda, double tol, unsigned max_iter,
                           bool penalize_intercept) {
  require(!datasets.empty(), Errc::invalid_spec, "no datasets supplied");
  Eigen::Index d = datasets.front().features();
  Eigen::Index n = 0;
  for (const LocalDataset& ds : datasets) {
    ds.validate();
    require(ds.features() == d, Errc::dimension_mismatch,
            "datasets disagree on feature count");
    n += ds.rows();
  }
  LocalDataset pooled;
  pooled.X.resize(n, d);
  pooled.y.resize(n);
  pooled.institution_id = "pooled";
  Eigen::Index at = 0;
  for (const LocalDataset& ds : datasets) {
    pooled.X.middleRows(at, ds.rows()) = ds.X;
    pooled.y.segment(at, ds.rows()) = ds.y;
    at += ds.rows();
  }

  ModelState state;
  state.beta = Eigen::VectorXd::Zero(d);
  for (unsigned it = 0; it < max_iter; ++it) {
    SummaryBundle s = local_summaries(pooled, state.beta);
    state.deviance_history.push_back(s.deviance);
    state.beta = newton_step(s.hessian, s.gradient, state.beta, lambda,
                             penalize_intercept);
    state.iteration = it + 1;
    if (check_convergence(state.deviance_history, tol)) {
      state.converged = true;
      break;
    }
  }
  return state;
}

}  // namespace seclr
