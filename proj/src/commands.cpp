#include "seclr/commands.hpp"

#include <filesystem>
#include <fstream>

#include "seclr/csv.hpp"
#include "seclr/partition.hpp"
#include "seclr/serialize.hpp"
#include "seclr/synthetic.hpp"

namespace seclr {

namespace fs = std::filesystem;

int exit_code_for(const Error& e) {
  switch (e.errc()) {
    case Errc::invalid_params:
    case Errc::invalid_spec:
      return kExitConfig;
    case Errc::io_error:
    case Errc::parse_error:
    case Errc::missing_column:
    case Errc::non_binary_response:
    case Errc::dimension_mismatch:
    case Errc::too_many_partitions:
    case Errc::overflow:
      return kExitData;
    case Errc::not_converged:
      return kExitConvergence;
    default:
      return kExitInternal;
  }
}

std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::io_error, "cannot open " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

ProtocolConfig ProtocolFlags::to_config() const {
  ProtocolConfig cfg;
  cfg.lambda = lambda;
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.sharing = {threshold, centers};
  cfg.scale_exponent = scale_bits;
  if (!modulus.empty()) {
    cfg.modulus = FieldModulus(u128_from_string(modulus));
  }
  cfg.share_policy = share_policy_from_name(share_policy);
  cfg.rng_seed = seed;
  cfg.validate();
  return cfg;
}

namespace {

nlohmann::json checksum_entry(const std::string& path) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a_file(path)));
  return {{"path", path}, {"fnv1a", buf}};
}

void write_manifest(const std::string& path, const std::string& command,
                    const nlohmann::json& config,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
  nlohmann::json inputs_j = nlohmann::json::array();
  for (const std::string& p : inputs) inputs_j.push_back(checksum_entry(p));
  nlohmann::json outputs_j = nlohmann::json::array();
  for (const std::string& p : outputs) outputs_j.push_back(checksum_entry(p));
  nlohmann::json manifest{{"command", command},
                          {"config", config},
                          {"inputs", inputs_j},
                          {"outputs", outputs_j}};
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::io_error, "cannot write " + path);
  out << manifest.dump(2) << "\n";
  require(out.good(), Errc::io_error, "write failed for " + path);
}

nlohmann::json protocol_flags_json(const ProtocolFlags& p) {
  return {{"lambda", p.lambda},
          {"tol", p.tol},
          {"max_iter", p.max_iter},
          {"threshold", p.threshold},
          {"centers", p.centers},
          {"scale_bits", p.scale_bits},
          {"modulus", p.modulus.empty()
                          ? u128_to_string(FieldModulus::mersenne127().value())
                          : p.modulus},
          {"share_policy", p.share_policy},
          {"seed", p.seed}};
}

std::string stem_of(const std::string& path) {
  fs::path p(path);
  fs::path dir = p.parent_path();
  return (dir / p.stem()).string();
}

}  // namespace

int cmd_gen_data(const GenDataOptions& opt) {
  SyntheticSpec spec;
  spec.d = opt.features;
  require(opt.institutions >= 1, Errc::invalid_spec,
          "need at least one institution");
  require(opt.records >= opt.institutions, Errc::invalid_spec,
          "fewer records than institutions");
  // Near-equal split of the requested record count.
  std::size_t base = opt.records / opt.institutions;
  std::size_t extra = opt.records % opt.institutions;
  for (std::size_t j = 0; j < opt.institutions; ++j) {
    spec.sizes.push_back(base + (j < extra ? 1 : 0));
  }
  spec.mu = opt.mu;
  spec.sigma = opt.sigma;
  spec.beta_min = opt.beta_min;
  spec.beta_max = opt.beta_max;
  spec.seed = opt.seed;

  auto [datasets, true_beta] = generate_synthetic(spec);

  fs::create_directories(opt.out_dir);
  std::vector<std::string> outputs;
  for (std::size_t j = 0; j < datasets.size(); ++j) {
    std::string path = (fs::path(opt.out_dir) /
                        (opt.prefix + "_inst" + std::to_string(j + 1) + ".csv"))
                           .string();
    write_csv(datasets[j], path);
    outputs.push_back(path);
  }

  nlohmann::json config{{"records", opt.records},
                        {"features", opt.features},
                        {"institutions", opt.institutions},
                        {"mu", opt.mu},
                        {"sigma", opt.sigma},
                        {"beta_min", opt.beta_min},
                        {"beta_max", opt.beta_max},
                        {"seed", opt.seed},
                        {"true_beta", vector_to_wire(true_beta)}};
  std::string manifest_path =
      (fs::path(opt.out_dir) / (opt.prefix + "_manifest.json")).string();
  write_manifest(manifest_path, "gen-data", config, {}, outputs);
  return kExitOk;
}

std::vector<LocalDataset> load_institutions(const DataInput& in) {
  require(!in.data_paths.empty(), Errc::invalid_spec, "no dataset files given");
  for (const std::string& p : in.data_paths) {
    require(fs::exists(p), Errc::io_error, "no such dataset file: " + p);
  }
  std::vector<LocalDataset> datasets;
  for (const std::string& p : in.data_paths) {
    TabularSource src;
    src.path = p;
    src.response = in.response;
    src.delimiter = in.delimiter;
    datasets.push_back(load_csv(src));
  }
  if (in.institutions > 1 && datasets.size() == 1) {
    return partition_horizontal(datasets.front(), in.institutions,
                                in.partition_seed);
  }
  return datasets;
}

int cmd_fit(const FitCmdOptions& opt) {
  ProtocolConfig cfg = opt.protocol.to_config();
  std::vector<LocalDataset> datasets = load_institutions(opt.input);

  Transcript transcript;
  FitResult result = run_protocol(datasets, cfg, transcript);

  std::vector<std::string> outputs;
  {
    std::ofstream out(opt.out, std::ios::binary);
    require(out.good(), Errc::io_error, "cannot write " + opt.out);
    out << fit_result_to_json(result).dump(2) << "\n";
    outputs.push_back(opt.out);
  }
  std::string dev_path = opt.deviance_out.empty()
                             ? stem_of(opt.out) + "_deviance.csv"
                             : opt.deviance_out;
  {
    std::ofstream out(dev_path, std::ios::binary);
    require(out.good(), Errc::io_error, "cannot write " + dev_path);
    out << "iteration,deviance\n";
    for (std::size_t i = 0; i < result.model.deviance_history.size(); ++i) {
      out << (i + 1) << "," << real17(result.model.deviance_history[i])
          << "\n";
    }
    outputs.push_back(dev_path);
  }
  if (!opt.transcript_path.empty()) {
    transcript.write_jsonl(opt.transcript_path);
    outputs.push_back(opt.transcript_path);
  }

  nlohmann::json config = protocol_flags_json(opt.protocol);
  config["institutions"] = datasets.size();
  write_manifest(stem_of(opt.out) + ".manifest.json", "fit", config,
                 opt.input.data_paths, outputs);

  if (!result.model.converged) {
    fail(Errc::not_converged,
         "protocol did not converge within " +
             std::to_string(cfg.max_iter) + " iterations");
  }
  return kExitOk;
}

int cmd_compare(const CompareOptions& opt) {
  ProtocolConfig cfg = opt.protocol.to_config();
  std::vector<LocalDataset> datasets = load_institutions(opt.input);

  Transcript transcript;
  FitResult fed = run_protocol(datasets, cfg, transcript);
  ModelState central = centralized_fit(datasets, cfg.lambda, cfg.tol,
                                       cfg.max_iter, cfg.penalize_intercept);

  Eigen::VectorXd diff = fed.model.beta - central.beta;
  double max_abs = diff.cwiseAbs().maxCoeff();
  double ss_res = diff.squaredNorm();
  double mean_c = central.beta.mean();
  double ss_tot = (central.beta.array() - mean_c).matrix().squaredNorm();
  double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);

  nlohmann::json per_coef = nlohmann::json::array();
  for (Eigen::Index k = 0; k < diff.size(); ++k) {
    per_coef.push_back({{"federated", real17(fed.model.beta(k))},
                        {"centralized", real17(central.beta(k))},
                        {"diff", real17(diff(k))}});
  }
  bool ok = max_abs <= opt.threshold;
  nlohmann::json report{{"max_abs_diff", max_abs},
                        {"r_squared", r2},
                        {"threshold", opt.threshold},
                        {"pass", ok},
                        {"federated_iterations", fed.model.iteration},
                        {"centralized_iterations", central.iteration},
                        {"coefficients", per_coef}};
  {
    std::ofstream out(opt.out, std::ios::binary);
    require(out.good(), Errc::io_error, "cannot write " + opt.out);
    out << report.dump(2) << "\n";
  }
  nlohmann::json config = protocol_flags_json(opt.protocol);
  config["parity_threshold"] = opt.threshold;
  write_manifest(stem_of(opt.out) + ".manifest.json", "compare", config,
                 opt.input.data_paths, {opt.out});
  return ok ? kExitOk : kExitParity;
}

std::vector<ScalingPoint> run_scaling_sweep(const BenchOptions& opt) {
  require(opt.repeats >= 1, Errc::invalid_params, "repeats must be >= 1");
  ProtocolConfig cfg = opt.protocol.to_config();
  std::vector<ScalingPoint> points;
  for (std::size_t s : opt.institution_counts) {
    SyntheticSpec spec;
    spec.d = opt.features;
    spec.sizes.assign(s, opt.records_per_institution);
    spec.seed = opt.data_seed;
    auto [datasets, true_beta] = generate_synthetic(spec);

    ScalingPoint pt;
    pt.institutions = s;
    pt.records_per_institution = opt.records_per_institution;
    for (unsigned rep = 0; rep < opt.repeats; ++rep) {
      Transcript transcript;
      FitResult r = run_protocol(datasets, cfg, transcript);
      pt.iterations = r.model.iteration;
      pt.central_seconds += r.central_phase_seconds;
      pt.total_seconds += r.total_seconds;
      pt.bytes_transmitted = r.bytes_transmitted;
    }
    pt.central_seconds /= opt.repeats;
    pt.total_seconds /= opt.repeats;
    points.push_back(pt);
  }
  return points;
}

int cmd_bench_scaling(const BenchOptions& opt) {
  std::vector<ScalingPoint> points = run_scaling_sweep(opt);
  std::ofstream out(opt.out, std::ios::binary);
  require(out.good(), Errc::io_error, "cannot write " + opt.out);
  out << "institutions,records_per_institution,iterations,central_seconds,"
         "total_seconds,bytes_transmitted\n";
  for (const ScalingPoint& p : points) {
    out << p.institutions << "," << p.records_per_institution << ","
        << p.iterations << "," << real17(p.central_seconds) << ","
        << real17(p.total_seconds) << "," << p.bytes_transmitted << "\n";
  }
  out.close();

  nlohmann::json config = protocol_flags_json(opt.protocol);
  config["institution_counts"] = opt.institution_counts;
  config["records_per_institution"] = opt.records_per_institution;
  config["features"] = opt.features;
  config["repeats"] = opt.repeats;
  config["data_seed"] = opt.data_seed;
  write_manifest(stem_of(opt.out) + ".manifest.json", "bench-scaling", config,
                 {}, {opt.out});
  return kExitOk;
}

}  // namespace seclr
