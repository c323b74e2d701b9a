#include "seclr/serialize.hpp"

#include <cstdio>

#include "seclr/errors.hpp"
#include "seclr/protocol.hpp"

namespace seclr {

std::string real17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_real(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  require(end == s.c_str() + s.size() && !s.empty(), Errc::parse_error,
          "not a real number: '" + s + "'");
  return v;
}

nlohmann::json grid_to_wire(const ShareGrid& grid, u128 modulus,
                            unsigned scale_exponent,
                            const SharingParams& sharing) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      entries.push_back({r, c, u128_to_string(grid.at(r, c))});
    }
  }
  return {{"modulus", u128_to_string(modulus)},
          {"scale_exponent", scale_exponent},
          {"t", sharing.t},
          {"w", sharing.w},
          {"shape", {grid.rows, grid.cols}},
          {"center_id", grid.eval_point},
          {"entries", std::move(entries)}};
}

nlohmann::json grid_to_wire(const SharedTensor& tensor, unsigned center_id) {
  require(center_id >= 1 && center_id <= tensor.sharing.w,
          Errc::invalid_params, "center_id outside 1..w");
  return grid_to_wire(tensor.grids[center_id - 1], tensor.modulus,
                      tensor.scale_exponent, tensor.sharing);
}

GridWire grid_from_wire(const nlohmann::json& j) {
  GridWire out;
  try {
    out.modulus = u128_from_string(j.at("modulus").get<std::string>());
    out.scale_exponent = j.at("scale_exponent").get<unsigned>();
    out.sharing.t = j.at("t").get<unsigned>();
    out.sharing.w = j.at("w").get<unsigned>();
    out.center_id = j.at("center_id").get<unsigned>();
    out.grid.eval_point = out.center_id;
    out.grid.rows = j.at("shape").at(0).get<std::size_t>();
    out.grid.cols = j.at("shape").at(1).get<std::size_t>();
    out.grid.values.assign(out.grid.rows * out.grid.cols, 0);
    for (const nlohmann::json& e : j.at("entries")) {
      std::size_t r = e.at(0).get<std::size_t>();
      std::size_t c = e.at(1).get<std::size_t>();
      require(r < out.grid.rows && c < out.grid.cols, Errc::parse_error,
              "entry index outside the declared shape");
      out.grid.values[r * out.grid.cols + c] =
          u128_from_string(e.at(2).get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("malformed grid object: ") + e.what());
  }
  return out;
}

nlohmann::json matrix_to_wire(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(real17(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_wire(const nlohmann::json& j) {
  try {
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows),
                      static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      require(j.at(r).size() == cols, Errc::parse_error,
              "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            parse_real(j.at(r).at(c).get<std::string>());
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error,
         std::string("malformed matrix object: ") + e.what());
  }
}

nlohmann::json vector_to_wire(const Eigen::VectorXd& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(real17(v(i)));
  }
  return out;
}

Eigen::VectorXd vector_from_wire(const nlohmann::json& j) {
  try {
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
      v(static_cast<Eigen::Index>(i)) = parse_real(j.at(i).get<std::string>());
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error,
         std::string("malformed vector object: ") + e.what());
  }
}

nlohmann::json fit_result_to_json(const FitResult& r) {
  return {{"samples", r.samples},
          {"features", r.features},
          {"iterations", r.model.iteration},
          {"converged", r.model.converged},
          {"central_runtime_seconds", r.central_phase_seconds},
          {"total_runtime_seconds", r.total_seconds},
          {"bytes_transmitted", r.bytes_transmitted},
          {"beta", vector_to_wire(r.model.beta)},
          {"deviance_trace", r.model.deviance_history}};
}

}  // namespace seclr
