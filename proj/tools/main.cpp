#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "seclr/commands.hpp"

namespace {

void add_protocol_flags(CLI::App* cmd, seclr::ProtocolFlags* p) {
  cmd->add_option("--lambda", p->lambda, "L2 penalty parameter (>= 0)");
  cmd->add_option("--tol", p->tol, "convergence tolerance on |dev_t - dev_{t-1}|");
  cmd->add_option("--max-iter", p->max_iter, "maximum Newton iterations");
  cmd->add_option("--threshold", p->threshold, "sharing threshold t (>= 2)");
  cmd->add_option("--centers", p->centers, "number of computation centers w");
  cmd->add_option("--scale-bits", p->scale_bits, "fixed-point fractional bits");
  cmd->add_option("--modulus", p->modulus,
                  "prime field modulus (decimal; default 2^127-1)");
  cmd->add_option("--share-policy", p->share_policy,
                  "which summaries are secret-shared")
      ->check(CLI::IsMember({"gradient-only", "all"}));
  cmd->add_option("--seed", p->seed, "protocol RNG seed");
}

void add_data_flags(CLI::App* cmd, seclr::DataInput* in) {
  cmd->add_option("--data", in->data_paths,
                  "dataset CSV (repeat for one file per institution)")
      ->required();
  cmd->add_option("--response", in->response, "response column name");
  cmd->add_option("--delimiter", in->delimiter, "CSV delimiter");
  cmd->add_option("--institutions", in->institutions,
                  "partition a single pooled CSV into this many institutions");
  cmd->add_option("--partition-seed", in->partition_seed,
                  "seed for the horizontal partition");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Federated L2-regularized logistic regression with "
               "Shamir-protected summary aggregation"};
  app.require_subcommand(1);

  seclr::GenDataOptions gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen-data", "generate synthetic institution CSVs");
  gen_cmd->add_option("--records", gen.records, "total records across institutions");
  gen_cmd->add_option("--features", gen.features,
                      "model dimension d (including intercept)");
  gen_cmd->add_option("--institutions", gen.institutions, "institution count");
  gen_cmd->add_option("--mu", gen.mu, "covariate mean");
  gen_cmd->add_option("--sigma", gen.sigma, "covariate standard deviation");
  gen_cmd->add_option("--beta-min", gen.beta_min, "true-coefficient lower bound");
  gen_cmd->add_option("--beta-max", gen.beta_max, "true-coefficient upper bound");
  gen_cmd->add_option("--seed", gen.seed, "generation seed");
  gen_cmd->add_option("--out-dir", gen.out_dir, "output directory");
  gen_cmd->add_option("--prefix", gen.prefix, "output filename prefix");

  seclr::FitCmdOptions fit;
  CLI::App* fit_cmd =
      app.add_subcommand("fit", "run the secure federated fit");
  add_data_flags(fit_cmd, &fit.input);
  add_protocol_flags(fit_cmd, &fit.protocol);
  fit_cmd->add_option("--out", fit.out, "fit result JSON path");
  fit_cmd->add_option("--deviance-out", fit.deviance_out,
                      "per-iteration deviance CSV path");
  fit_cmd->add_option("--transcript", fit.transcript_path,
                      "write the full message transcript (JSON lines)");

  seclr::CompareOptions cmp;
  CLI::App* cmp_cmd = app.add_subcommand(
      "compare", "federated vs centralized parity report");
  add_data_flags(cmp_cmd, &cmp.input);
  add_protocol_flags(cmp_cmd, &cmp.protocol);
  cmp_cmd->add_option("--parity-threshold", cmp.threshold,
                      "max-abs coefficient difference allowed");
  cmp_cmd->add_option("--out", cmp.out, "parity report JSON path");

  seclr::BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench-scaling", "sweep institution counts, record timing CSV");
  bench_cmd->add_option("--institutions", bench.institution_counts,
                        "institution counts to sweep");
  bench_cmd->add_option("--records-per-institution",
                        bench.records_per_institution,
                        "records contributed by each institution");
  bench_cmd->add_option("--features", bench.features,
                        "model dimension d (including intercept)");
  bench_cmd->add_option("--repeats", bench.repeats,
                        "protocol runs averaged per sweep point");
  bench_cmd->add_option("--data-seed", bench.data_seed, "generation seed");
  add_protocol_flags(bench_cmd, &bench.protocol);
  bench_cmd->add_option("--out", bench.out, "scaling CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return seclr::cmd_gen_data(gen);
    if (*fit_cmd) return seclr::cmd_fit(fit);
    if (*cmp_cmd) return seclr::cmd_compare(cmp);
    if (*bench_cmd) return seclr::cmd_bench_scaling(bench);
  } catch (const seclr::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return seclr::exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return seclr::kExitInternal;
  }
  return seclr::kExitInternal;
}
