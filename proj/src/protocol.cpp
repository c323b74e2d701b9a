#include "seclr/protocol.hpp"

#include <chrono>
#include <future>
#include <set>

#include "seclr/serialize.hpp"

namespace seclr {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string inst_addr(const std::string& id) { return "inst:" + id; }
std::string center_addr(unsigned id) {
  return "center:" + std::to_string(id);
}

}  // namespace

SharePolicy share_policy_from_name(const std::string& name) {
  if (name == "gradient-only" || name == "gradient_only") {
    return SharePolicy::gradient_only;
  }
  if (name == "all" || name == "all_summaries") {
    return SharePolicy::all_summaries;
  }
  fail(Errc::invalid_params, "unknown share policy '" + name + "'");
}

std::string share_policy_name(SharePolicy p) {
  return p == SharePolicy::gradient_only ? "gradient-only" : "all";
}

void ProtocolConfig::validate() const {
  require(lambda >= 0.0, Errc::invalid_params, "lambda must be >= 0");
  sharing.validate(modulus);
  require(scale_exponent >= 1 && scale_exponent <= 120, Errc::invalid_params,
          "scale_exponent must be in 1..120");
  require(tol > 0.0, Errc::invalid_params, "tolerance must be positive");
  require(max_iter >= 1, Errc::invalid_params, "max_iter must be >= 1");
}

ShareSubmission institution_round(const LocalDataset& data,
                                  const Eigen::VectorXd& beta,
                                  const ProtocolConfig& cfg,
                                  unsigned iteration,
                                  std::size_t institution_index,
                                  std::size_t institution_count) {
  cfg.validate();
  SummaryBundle s = local_summaries(data, beta);

  // Sharing randomness is keyed by (institution, iteration) so parallel
  // institution rounds reproduce bit-identically under one run seed.
  SplitRng rng =
      SplitRng(cfg.rng_seed).split(institution_index + 1, iteration);
  unsigned addends = static_cast<unsigned>(institution_count);

  ShareSubmission sub;
  sub.institution_id = data.institution_id;
  sub.iteration = iteration;
  sub.gradient = share_tensor(s.gradient, cfg.scale_exponent, cfg.modulus,
                              cfg.sharing, rng, addends);
  Eigen::MatrixXd dev(1, 1);
  dev(0, 0) = s.deviance;
  sub.deviance = share_tensor(dev, cfg.scale_exponent, cfg.modulus,
                              cfg.sharing, rng, addends);
  if (cfg.share_policy == SharePolicy::all_summaries) {
    sub.hessian = share_tensor(s.hessian, cfg.scale_exponent, cfg.modulus,
                               cfg.sharing, rng, addends);
  } else {
    sub.hessian_plain = std::move(s.hessian);
  }
  return sub;
}

CenterAggregate center_aggregate(const std::vector<ShareSubmission>& subs,
                                 unsigned center_id,
                                 std::size_t expected_institutions) {
  require(subs.size() == expected_institutions, Errc::missing_submission,
          "expected " + std::to_string(expected_institutions) +
              " submissions, got " + std::to_string(subs.size()));
  require(!subs.empty(), Errc::missing_submission, "no submissions");

  std::set<std::string> ids;
  unsigned iteration = subs.front().iteration;
  bool shared_hessian = subs.front().hessian.has_value();
  for (const ShareSubmission& sub : subs) {
    require(sub.iteration == iteration, Errc::iteration_mismatch,
            "submissions span different iterations");
    require(ids.insert(sub.institution_id).second, Errc::missing_submission,
            "duplicate submission from " + sub.institution_id);
    require(sub.hessian.has_value() == shared_hessian, Errc::layout_mismatch,
            "submissions mix share policies");
  }

  const ShareSubmission& first = subs.front();
  u128 p = first.gradient.modulus;
  require(center_id >= 1 && center_id <= first.gradient.sharing.w,
          Errc::invalid_params, "center_id outside 1..w");

  CenterAggregate agg;
  agg.center_id = center_id;
  agg.iteration = iteration;
  agg.gradient = first.gradient.grids[center_id - 1];
  agg.deviance = first.deviance.grids[center_id - 1];
  if (shared_hessian) {
    agg.hessian = first.hessian->grids[center_id - 1];
  } else {
    agg.hessian_plain = *first.hessian_plain;
  }
  for (std::size_t j = 1; j < subs.size(); ++j) {
    agg.gradient =
        add_grids(agg.gradient, subs[j].gradient.grids[center_id - 1], p);
    agg.deviance =
        add_grids(agg.deviance, subs[j].deviance.grids[center_id - 1], p);
    if (shared_hessian) {
      *agg.hessian =
          add_grids(*agg.hessian, subs[j].hessian->grids[center_id - 1], p);
    } else {
      *agg.hessian_plain += *subs[j].hessian_plain;
    }
  }
  return agg;
}

std::pair<Eigen::VectorXd, double> center_finalize(
    const std::vector<CenterAggregate>& aggregates,
    const Eigen::VectorXd& beta_old, const ProtocolConfig& cfg) {
  require(aggregates.size() >= cfg.sharing.t, Errc::insufficient_shares,
          "finalize needs at least t = " + std::to_string(cfg.sharing.t) +
              " centers, got " + std::to_string(aggregates.size()));
  unsigned iteration = aggregates.front().iteration;
  std::vector<ShareGrid> g_grids, dev_grids, h_grids;
  for (const CenterAggregate& a : aggregates) {
    require(a.iteration == iteration, Errc::iteration_mismatch,
            "aggregates span different iterations");
    g_grids.push_back(a.gradient);
    dev_grids.push_back(a.deviance);
    if (a.hessian.has_value()) h_grids.push_back(*a.hessian);
  }

  std::size_t d = aggregates.front().gradient.rows;
  Eigen::MatrixXd g_sum = reconstruct_tensor(
      g_grids, d, 1, cfg.scale_exponent, cfg.sharing, cfg.modulus);
  Eigen::MatrixXd dev_sum = reconstruct_tensor(
      dev_grids, 1, 1, cfg.scale_exponent, cfg.sharing, cfg.modulus);

  Eigen::MatrixXd h_sum;
  if (!h_grids.empty()) {
    require(h_grids.size() == aggregates.size(), Errc::layout_mismatch,
            "aggregates mix share policies");
    h_sum = reconstruct_tensor(h_grids, d, d, cfg.scale_exponent, cfg.sharing,
                               cfg.modulus);
  } else {
    require(aggregates.front().hessian_plain.has_value(),
            Errc::layout_mismatch, "no Hessian available for finalize");
    h_sum = *aggregates.front().hessian_plain;
  }

  Eigen::VectorXd beta_new = newton_step(h_sum, g_sum.col(0), beta_old,
                                         cfg.lambda, cfg.penalize_intercept);
  return {std::move(beta_new), dev_sum(0, 0)};
}

namespace {

nlohmann::json submission_body(const ShareSubmission& sub,
                               unsigned center_id) {
  nlohmann::json body{
      {"institution_id", sub.institution_id},
      {"gradient", grid_to_wire(sub.gradient, center_id)},
      {"deviance", grid_to_wire(sub.deviance, center_id)}};
  if (sub.hessian.has_value()) {
    body["hessian"] = grid_to_wire(*sub.hessian, center_id);
  } else {
    body["hessian_plaintext"] = matrix_to_wire(*sub.hessian_plain);
  }
  return body;
}

nlohmann::json aggregate_body(const CenterAggregate& agg,
                              const ProtocolConfig& cfg) {
  u128 p = cfg.modulus.value();
  nlohmann::json body{
      {"center_id", agg.center_id},
      {"gradient",
       grid_to_wire(agg.gradient, p, cfg.scale_exponent, cfg.sharing)},
      {"deviance",
       grid_to_wire(agg.deviance, p, cfg.scale_exponent, cfg.sharing)}};
  if (agg.hessian.has_value()) {
    body["hessian"] =
        grid_to_wire(*agg.hessian, p, cfg.scale_exponent, cfg.sharing);
  } else {
    body["hessian_plaintext"] = matrix_to_wire(*agg.hessian_plain);
  }
  return body;
}

}  // namespace

FitResult run_protocol(const std::vector<LocalDataset>& datasets,
                       const ProtocolConfig& cfg, Transcript& transcript) {
  cfg.validate();
  require(!datasets.empty(), Errc::invalid_spec, "no datasets supplied");
  Eigen::Index d = datasets.front().features();
  std::size_t samples = 0;
  for (const LocalDataset& ds : datasets) {
    ds.validate();
    require(ds.features() == d, Errc::dimension_mismatch,
            "datasets disagree on feature count");
    samples += static_cast<std::size_t>(ds.rows());
  }
  std::size_t s_count = datasets.size();
  unsigned t = cfg.sharing.t;
  unsigned w = cfg.sharing.w;
  unsigned lead = 1;  // lowest-id quorum center reconstructs

  FitResult result;
  result.samples = samples;
  result.features = static_cast<std::size_t>(d);
  result.model.beta = Eigen::VectorXd::Zero(d);

  Clock::time_point run_start = Clock::now();
  for (unsigned it = 1; it <= cfg.max_iter; ++it) {
    // Distributed phase: institution rounds are pure and run concurrently.
    std::vector<std::future<ShareSubmission>> futures;
    futures.reserve(s_count);
    for (std::size_t j = 0; j < s_count; ++j) {
      futures.push_back(std::async(std::launch::async, [&, j] {
        return institution_round(datasets[j], result.model.beta, cfg, it, j,
                                 s_count);
      }));
    }
    std::vector<ShareSubmission> subs;
    subs.reserve(s_count);
    for (auto& f : futures) subs.push_back(f.get());

    for (const ShareSubmission& sub : subs) {
      for (unsigned c = 1; c <= w; ++c) {
        transcript.append(MsgType::submission, it,
                          inst_addr(sub.institution_id), center_addr(c),
                          submission_body(sub, c));
      }
    }

    // Central phase: share-local aggregation at every center, then the
    // quorum's reconstruction and Newton update at the lead.
    Clock::time_point central_start = Clock::now();
    std::vector<CenterAggregate> aggregates;
    aggregates.reserve(w);
    for (unsigned c = 1; c <= w; ++c) {
      aggregates.push_back(center_aggregate(subs, c, s_count));
    }
    std::vector<CenterAggregate> quorum(aggregates.begin(),
                                        aggregates.begin() + t);
    auto [beta_new, dev] = center_finalize(quorum, result.model.beta, cfg);
    result.central_phase_seconds += seconds_since(central_start);

    for (unsigned c = 2; c <= t; ++c) {
      transcript.append(MsgType::aggregate, it, center_addr(c),
                        center_addr(lead),
                        aggregate_body(aggregates[c - 1], cfg));
    }

    result.model.deviance_history.push_back(dev);
    result.model.beta = beta_new;
    result.model.iteration = it;
    result.model.converged =
        check_convergence(result.model.deviance_history, cfg.tol);

    nlohmann::json broadcast{{"beta", vector_to_wire(result.model.beta)},
                             {"deviance", real17(dev)},
                             {"converged", result.model.converged}};
    for (const LocalDataset& ds : datasets) {
      transcript.append(MsgType::beta_broadcast, it, center_addr(lead),
                        inst_addr(ds.institution_id), broadcast);
    }

    if (result.model.converged) break;
  }
  result.total_seconds = seconds_since(run_start);
  result.bytes_transmitted = transcript.total_bytes();
  return result;
}

}  // namespace seclr
