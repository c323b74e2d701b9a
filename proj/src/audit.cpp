#include <algorithm>
#include <array>
#include <cstdlib>

#include "seclr/protocol.hpp"
#include "seclr/serialize.hpp"

namespace seclr {

double uniformity_chi2(const std::vector<u128>& values, u128 modulus) {
  constexpr std::size_t kBuckets = 64;
  u128 width = (modulus + (kBuckets - 1)) / kBuckets;
  std::array<std::size_t, kBuckets> counts{};
  for (u128 v : values) {
    counts[static_cast<std::size_t>(v / width)] += 1;
  }
  double expected = static_cast<double>(values.size()) / kBuckets;
  double stat = 0.0;
  for (std::size_t c : counts) {
    double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

namespace {

// Values that legitimately appear as shares in a message body.
void collect_grid_values(const nlohmann::json& grid_obj,
                         std::vector<u128>& out) {
  for (const nlohmann::json& e : grid_obj.at("entries")) {
    out.push_back(u128_from_string(e.at(2).get<std::string>()));
  }
}

bool parses_as_number(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::size_t count_numeric_leaves(const nlohmann::json& j) {
  if (j.is_number()) return 1;
  if (j.is_string()) return parses_as_number(j.get<std::string>()) ? 1 : 0;
  std::size_t n = 0;
  if (j.is_array() || j.is_object()) {
    for (const auto& item : j.items()) n += count_numeric_leaves(item.value());
  }
  return n;
}

}  // namespace

AuditReport privacy_audit(const Transcript& transcript,
                          const std::vector<unsigned>& center_subset,
                          const ProtocolConfig& cfg) {
  require(center_subset.size() < cfg.sharing.t, Errc::invalid_params,
          "audit subset must be smaller than the threshold t");
  AuditReport report;
  report.center_subset = center_subset;

  std::vector<std::string> addrs;
  for (unsigned c : center_subset) addrs.push_back("center:" + std::to_string(c));
  auto in_subset = [&](const std::string& a) {
    return std::find(addrs.begin(), addrs.end(), a) != addrs.end();
  };

  std::vector<u128> share_values;
  for (const Message& m : transcript.messages()) {
    if (!in_subset(m.sender) && !in_subset(m.receiver)) continue;
    report.messages_visible += 1;

    const nlohmann::json& body = m.body;
    for (const char* key : {"gradient", "deviance", "hessian"}) {
      // In beta broadcasts "deviance" is a plain (public, aggregated) real,
      // not a share grid.
      if (body.contains(key) && body.at(key).is_object() &&
          body.at(key).contains("entries")) {
        collect_grid_values(body.at(key), share_values);
      }
    }
    if (body.contains("hessian_plaintext")) {
      std::size_t n = 0;
      for (const nlohmann::json& row : body.at("hessian_plaintext")) {
        n += row.size();
      }
      if (cfg.share_policy == SharePolicy::gradient_only) {
        report.policy_exposed_hessian_values += n;
      } else {
        report.plaintext_summary_values += n;
      }
    }
    // A leaked row of X or y would have to ride in a field outside the
    // message schema; anything unexpected counts against the run.
    for (const auto& item : body.items()) {
      const std::string& key = item.key();
      if (key == "gradient" || key == "deviance" || key == "hessian" ||
          key == "hessian_plaintext" || key == "institution_id" ||
          key == "center_id" || key == "beta" || key == "converged") {
        continue;
      }
      std::size_t n = count_numeric_leaves(item.value());
      if (n > 0) {
        report.plaintext_summary_values += n;
        report.raw_row_leak = true;
      }
    }
  }

  report.share_values_observed = share_values.size();
  // Need enough mass per bucket for the chi-square approximation.
  if (share_values.size() >= 3200) {
    report.chi2_evaluated = true;
    report.chi2_statistic = uniformity_chi2(share_values, cfg.modulus.value());
    report.chi2_pass = report.chi2_statistic <= kChi2Critical63At1em3;
  }
  report.pass = report.plaintext_summary_values == 0 && !report.raw_row_leak &&
                report.chi2_pass &&
                (cfg.share_policy == SharePolicy::gradient_only ||
                 report.policy_exposed_hessian_values == 0);
  return report;
}

}  // namespace seclr
