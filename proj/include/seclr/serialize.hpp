#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <string>

#include "seclr/shamir.hpp"

namespace seclr {

// Canonical per-center wire object for one shared tensor:
// {modulus, scale_exponent, t, w, shape, center_id, entries} with every
// field element rendered as a decimal string.
nlohmann::json grid_to_wire(const SharedTensor& tensor, unsigned center_id);
nlohmann::json grid_to_wire(const ShareGrid& grid, u128 modulus,
                            unsigned scale_exponent,
                            const SharingParams& sharing);

struct GridWire {
  u128 modulus = 0;
  unsigned scale_exponent = 0;
  SharingParams sharing;
  unsigned center_id = 0;
  ShareGrid grid;
};

GridWire grid_from_wire(const nlohmann::json& j);

// Plaintext real matrices/vectors travel as decimal strings with 17
// significant digits (round-trip exact for doubles).
std::string real17(double v);
double parse_real(const std::string& s);

nlohmann::json matrix_to_wire(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_wire(const nlohmann::json& j);

nlohmann::json vector_to_wire(const Eigen::VectorXd& v);
Eigen::VectorXd vector_from_wire(const nlohmann::json& j);

struct FitResult;

// Machine-readable fit report: sample/feature/iteration counts, the
// central/total runtime split, and bytes transmitted, plus the fitted
// coefficients and deviance trace.
nlohmann::json fit_result_to_json(const FitResult& r);

}  // namespace seclr
