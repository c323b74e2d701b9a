#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seclr/commands.hpp"
#include "seclr/csv.hpp"
#include "seclr/fixed_point.hpp"
#include "seclr/logistic.hpp"
#include "seclr/partition.hpp"
#include "seclr/protocol.hpp"
#include "seclr/serialize.hpp"
#include "seclr/shamir.hpp"
#include "seclr/synthetic.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// Field elements cross the boundary as ordinary python ints (they exceed
// uint64), round-tripped through their decimal representation.
template <>
struct type_caster<seclr::u128> {
 public:
  PYBIND11_TYPE_CASTER(seclr::u128, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    try {
      std::string s = py::str(src);
      value = seclr::u128_from_string(s);
    } catch (const seclr::Error&) {
      return false;
    }
    return true;
  }

  static handle cast(seclr::u128 v, return_value_policy, handle) {
    py::object obj =
        py::reinterpret_steal<py::object>(
            PyLong_FromString(seclr::u128_to_string(v).c_str(), nullptr, 10));
    return obj.release();
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace seclr;

std::vector<LocalDataset> to_datasets(
    const std::vector<std::pair<Eigen::MatrixXd, Eigen::VectorXd>>& parts) {
  std::vector<LocalDataset> datasets;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    LocalDataset ds;
    ds.X = parts[j].first;
    ds.y = parts[j].second;
    ds.institution_id = "inst_" + std::to_string(j + 1);
    ds.validate();
    datasets.push_back(std::move(ds));
  }
  return datasets;
}

py::dict model_to_dict(const ModelState& m) {
  py::dict d;
  d["beta"] = m.beta;
  d["iterations"] = m.iteration;
  d["deviance_trace"] = m.deviance_history;
  d["converged"] = m.converged;
  return d;
}

ProtocolConfig make_config(double lam, unsigned t, unsigned w,
                           unsigned scale_bits, const std::string& policy,
                           double tol, unsigned max_iter, std::uint64_t seed,
                           u128 modulus) {
  ProtocolConfig cfg;
  cfg.lambda = lam;
  cfg.sharing = {t, w};
  if (modulus != 0) cfg.modulus = FieldModulus(modulus);
  cfg.scale_exponent = scale_bits;
  cfg.share_policy = share_policy_from_name(policy);
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.rng_seed = seed;
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_seclr, m) {
  m.doc() = "Federated L2-regularized logistic regression with "
            "Shamir-protected summary aggregation";

  py::register_exception<Error>(m, "SeclrError");

  m.def("sigmoid", &sigmoid, py::arg("z"));

  m.def(
      "fit_centralized",
      [](const std::vector<std::pair<Eigen::MatrixXd, Eigen::VectorXd>>& parts,
         double lam, double tol, unsigned max_iter) {
        ModelState s = centralized_fit(to_datasets(parts), lam, tol, max_iter);
        return model_to_dict(s);
      },
      py::arg("datasets"), py::arg("lam") = 1.0, py::arg("tol") = 1e-10,
      py::arg("max_iter") = 50,
      "Gold-standard pooled Newton-Raphson fit from beta = 0.");

  m.def(
      "fit_federated",
      [](const std::vector<std::pair<Eigen::MatrixXd, Eigen::VectorXd>>& parts,
         double lam, unsigned t, unsigned w, unsigned scale_bits,
         const std::string& share_policy, double tol, unsigned max_iter,
         std::uint64_t seed, u128 modulus) {
        ProtocolConfig cfg = make_config(lam, t, w, scale_bits, share_policy,
                                         tol, max_iter, seed, modulus);
        Transcript transcript;
        FitResult r = run_protocol(to_datasets(parts), cfg, transcript);
        py::dict d = model_to_dict(r.model);
        d["samples"] = r.samples;
        d["features"] = r.features;
        d["central_seconds"] = r.central_phase_seconds;
        d["total_seconds"] = r.total_seconds;
        d["bytes_transmitted"] = r.bytes_transmitted;
        return d;
      },
      py::arg("datasets"), py::arg("lam") = 1.0, py::arg("t") = 3,
      py::arg("w") = 5, py::arg("scale_bits") = 40,
      py::arg("share_policy") = "all", py::arg("tol") = 1e-10,
      py::arg("max_iter") = 50, py::arg("seed") = 0, py::arg("modulus") = 0,
      "Secure multi-institution fit; summaries are secret-shared per "
      "share_policy and only aggregates are ever reconstructed.");

  m.def(
      "generate_synthetic",
      [](unsigned d, const std::vector<std::size_t>& sizes, double mu,
         double sigma, double beta_min, double beta_max, std::uint64_t seed) {
        SyntheticSpec spec;
        spec.d = d;
        spec.sizes = sizes;
        spec.mu = mu;
        spec.sigma = sigma;
        spec.beta_min = beta_min;
        spec.beta_max = beta_max;
        spec.seed = seed;
        auto [datasets, beta] = generate_synthetic(spec);
        std::vector<std::pair<Eigen::MatrixXd, Eigen::VectorXd>> out;
        for (LocalDataset& ds : datasets) out.emplace_back(ds.X, ds.y);
        return py::make_tuple(out, beta);
      },
      py::arg("d") = 6, py::arg("sizes") = std::vector<std::size_t>{1000},
      py::arg("mu") = 0.0, py::arg("sigma") = 1.0, py::arg("beta_min") = -1.0,
      py::arg("beta_max") = 1.0, py::arg("seed") = 0);

  m.def(
      "partition_horizontal",
      [](const Eigen::MatrixXd& x, const Eigen::VectorXd& y, std::size_t s,
         std::uint64_t seed) {
        LocalDataset pooled;
        pooled.X = x;
        pooled.y = y;
        pooled.institution_id = "pooled";
        std::vector<std::pair<Eigen::MatrixXd, Eigen::VectorXd>> out;
        for (LocalDataset& ds : partition_horizontal(pooled, s, seed)) {
          out.emplace_back(std::move(ds.X), std::move(ds.y));
        }
        return out;
      },
      py::arg("X"), py::arg("y"), py::arg("s"), py::arg("seed") = 0);

  m.def(
      "load_csv",
      [](const std::string& path, const std::string& response,
         const std::string& delimiter,
         const std::map<std::string, int>& response_mapping) {
        TabularSource src;
        src.path = path;
        src.response = response;
        if (!delimiter.empty()) src.delimiter = delimiter[0];
        src.response_mapping = response_mapping;
        LocalDataset ds = load_csv(src);
        return py::make_tuple(ds.X, ds.y);
      },
      py::arg("path"), py::arg("response") = "y", py::arg("delimiter") = ",",
      py::arg("response_mapping") = std::map<std::string, int>{});

  m.def(
      "share_secret",
      [](u128 secret, unsigned t, unsigned w, u128 modulus,
         std::uint64_t seed) {
        FieldModulus p(modulus);
        SplitRng rng(seed);
        std::vector<std::pair<unsigned, u128>> out;
        for (const Share& s : share_secret(secret, {t, w}, p, rng)) {
          out.emplace_back(s.eval_point, s.value);
        }
        return out;
      },
      py::arg("secret"), py::arg("t"), py::arg("w"), py::arg("modulus"),
      py::arg("seed") = 0);

  m.def(
      "reconstruct_secret",
      [](const std::vector<std::pair<unsigned, u128>>& shares, unsigned t,
         unsigned w, u128 modulus) {
        FieldModulus p(modulus);
        std::vector<Share> sh;
        for (const auto& [x, v] : shares) sh.push_back({x, v});
        return reconstruct_secret(sh, {t, w}, p);
      },
      py::arg("shares"), py::arg("t"), py::arg("w"), py::arg("modulus"));

  m.def("encode_fixed",
        [](double x, unsigned scale_bits, u128 modulus, unsigned max_addends) {
          return encode_fixed(x, scale_bits, FieldModulus(modulus),
                              max_addends);
        },
        py::arg("x"), py::arg("scale_bits"), py::arg("modulus"),
        py::arg("max_addends") = 1);

  m.def("decode_fixed",
        [](u128 e, unsigned scale_bits, u128 modulus) {
          return decode_fixed(e, scale_bits, FieldModulus(modulus));
        },
        py::arg("e"), py::arg("scale_bits"), py::arg("modulus"));

  m.attr("MERSENNE127") = py::cast(FieldModulus::mersenne127().value());
}
