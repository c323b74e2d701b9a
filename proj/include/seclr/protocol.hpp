#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "seclr/dataset.hpp"
#include "seclr/logistic.hpp"
#include "seclr/shamir.hpp"
#include "seclr/transcript.hpp"

namespace seclr {

// Which local summaries are secret-shared. gradient_only is the pragmatic
// mode: inference attacks need both Hessian and gradient, so sharing the
// gradient (and deviance) while the Hessian travels plaintext already
// blocks them. all_summaries shares everything.
enum class SharePolicy { gradient_only, all_summaries };

SharePolicy share_policy_from_name(const std::string& name);
std::string share_policy_name(SharePolicy p);

struct ProtocolConfig {
  double lambda = 1.0;
  SharingParams sharing;  // t-out-of-w centers
  FieldModulus modulus = FieldModulus::mersenne127();
  unsigned scale_exponent = 40;
  double tol = 1e-10;
  unsigned max_iter = 50;
  SharePolicy share_policy = SharePolicy::all_summaries;
  std::uint64_t rng_seed = 0;
  bool penalize_intercept = true;

  void validate() const;
};

// What one institution submits for one iteration. The SharedTensors hold
// the per-center share grids; raw X and y never appear here.
struct ShareSubmission {
  std::string institution_id;
  unsigned iteration = 0;  // 1-based
  SharedTensor gradient;   // d x 1
  SharedTensor deviance;   // 1 x 1
  std::optional<SharedTensor> hessian;           // all_summaries
  std::optional<Eigen::MatrixXd> hessian_plain;  // gradient_only
};

// One center's share-local sums across institutions.
struct CenterAggregate {
  unsigned center_id = 0;  // == eval point
  unsigned iteration = 0;
  ShareGrid gradient;
  ShareGrid deviance;
  std::optional<ShareGrid> hessian;
  std::optional<Eigen::MatrixXd> hessian_plain;
};

// Computes the local summaries at beta, fixed-point-encodes and
// secret-shares them per cfg.share_policy. institution_index keys the
// sharing randomness substream; institution_count sets the encoder's
// aggregation headroom.
ShareSubmission institution_round(const LocalDataset& data,
                                  const Eigen::VectorXd& beta,
                                  const ProtocolConfig& cfg,
                                  unsigned iteration,
                                  std::size_t institution_index,
                                  std::size_t institution_count);

// Share-local aggregation at one center: no communication, no
// reconstruction. Throws Errc::missing_submission unless exactly
// expected_institutions distinct submissions (same iteration) are present.
CenterAggregate center_aggregate(const std::vector<ShareSubmission>& subs,
                                 unsigned center_id,
                                 std::size_t expected_institutions);

// Reconstructs ONLY the aggregated sums from >= t centers, decodes, and
// applies the penalized Newton update. Returns (beta_new, deviance at
// beta_old). Per-institution values are never reconstructed.
std::pair<Eigen::VectorXd, double> center_finalize(
    const std::vector<CenterAggregate>& aggregates,
    const Eigen::VectorXd& beta_old, const ProtocolConfig& cfg);

struct FitResult {
  ModelState model;
  std::size_t samples = 0;
  std::size_t features = 0;
  double central_phase_seconds = 0.0;
  double total_seconds = 0.0;
  std::uint64_t bytes_transmitted = 0;
};

// Runs the full iterative protocol: parallel institution rounds, per-center
// aggregation, quorum reconstruction and Newton update, beta broadcast;
// stops on deviance convergence or max_iter (converged flag reports which).
// Every message is appended to the transcript in deterministic order.
FitResult run_protocol(const std::vector<LocalDataset>& datasets,
                       const ProtocolConfig& cfg, Transcript& transcript);

// What a colluding subset of fewer than t centers could see, checked
// against the share policy, plus a uniformity test over the observed share
// values when enough of them are visible.
struct AuditReport {
  std::vector<unsigned> center_subset;
  std::size_t messages_visible = 0;
  std::size_t share_values_observed = 0;
  std::size_t plaintext_summary_values = 0;       // policy violations
  std::size_t policy_exposed_hessian_values = 0;  // permitted under gradient_only
  bool raw_row_leak = false;
  double chi2_statistic = 0.0;
  bool chi2_evaluated = false;
  bool chi2_pass = true;
  bool pass = false;
};

AuditReport privacy_audit(const Transcript& transcript,
                          const std::vector<unsigned>& center_subset,
                          const ProtocolConfig& cfg);

// Chi-square statistic over 64 equal-width value buckets, and the rejection
// threshold for significance 1e-3 at 63 degrees of freedom.
double uniformity_chi2(const std::vector<u128>& values, u128 modulus);
inline constexpr double kChi2Critical63At1em3 = 103.44237731987324;

}  // namespace seclr
