#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seclr/errors.hpp"
#include "seclr/protocol.hpp"

namespace seclr {

// CLI exit codes: config, data and convergence failures are distinct so
// scripts can branch on them.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitConvergence = 4;
inline constexpr int kExitParity = 5;

int exit_code_for(const Error& e);

// FNV-1a over file contents; manifest bookkeeping, not cryptographic.
std::uint64_t fnv1a_file(const std::string& path);

// Sharing/field/solver flags shared by fit-like commands.
struct ProtocolFlags {
  double lambda = 1.0;
  double tol = 1e-10;
  unsigned max_iter = 50;
  unsigned threshold = 3;
  unsigned centers = 5;
  unsigned scale_bits = 40;
  std::string modulus;  // decimal; empty selects 2^127 - 1
  std::string share_policy = "all";
  std::uint64_t seed = 0;

  ProtocolConfig to_config() const;
};

struct GenDataOptions {
  std::size_t records = 1000;
  unsigned features = 6;  // includes the intercept
  std::size_t institutions = 1;
  double mu = 0.0;
  double sigma = 1.0;
  double beta_min = -1.0;
  double beta_max = 1.0;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string prefix = "data";
};

// Writes one CSV per institution plus a manifest; returns an exit code.
int cmd_gen_data(const GenDataOptions& opt);

struct DataInput {
  std::vector<std::string> data_paths;  // one CSV per institution
  std::string response = "y";
  char delimiter = ',';
  // If > 1 with a single input file, the pooled rows are partitioned
  // horizontally into this many institutions (seeded).
  std::size_t institutions = 0;
  std::uint64_t partition_seed = 0;
};

std::vector<LocalDataset> load_institutions(const DataInput& in);

struct FitCmdOptions {
  DataInput input;
  ProtocolFlags protocol;
  std::string out = "fit_result.json";
  std::string deviance_out;  // default: <out stem>_deviance.csv
  std::string transcript_path;
};

int cmd_fit(const FitCmdOptions& opt);

struct CompareOptions {
  DataInput input;
  ProtocolFlags protocol;
  double threshold = 1e-6;  // max-abs coefficient difference
  std::string out = "parity_report.json";
};

// Federated vs centralized parity report; exits kExitParity when the
// max-abs difference exceeds the threshold.
int cmd_compare(const CompareOptions& opt);

struct BenchOptions {
  std::vector<std::size_t> institution_counts = {5, 10, 25, 50, 100};
  std::size_t records_per_institution = 1000;
  unsigned features = 6;
  unsigned repeats = 3;
  ProtocolFlags protocol;
  std::uint64_t data_seed = 0;
  std::string out = "scaling.csv";
};

// One CSV row per sweep point with mean central/total runtimes and bytes.
int cmd_bench_scaling(const BenchOptions& opt);

// Scaling measurements, also usable directly from tests.
struct ScalingPoint {
  std::size_t institutions = 0;
  std::size_t records_per_institution = 0;
  unsigned iterations = 0;
  double central_seconds = 0.0;
  double total_seconds = 0.0;
  std::uint64_t bytes_transmitted = 0;
};

std::vector<ScalingPoint> run_scaling_sweep(const BenchOptions& opt);

}  // namespace seclr
