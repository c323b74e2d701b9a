#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "seclr/field.hpp"
#include "seclr/rng.hpp"

namespace seclr {

// t-out-of-w threshold sharing. t >= 2: a single-point "sharing" (t = 1)
// places the secret itself on every share and is rejected outright.
struct SharingParams {
  unsigned t = 3;
  unsigned w = 5;

  void validate(const FieldModulus& p) const;
};

// One evaluation of the secret polynomial: (x, q(x)). x >= 1 always; q(0)
// is the secret and is never materialized as a share.
struct Share {
  unsigned eval_point = 0;
  FieldElement value = 0;
};

// Splits m into w shares of a random degree-(t-1) polynomial with q(0) = m.
// Coefficients are drawn uniformly from [0, p) via the supplied stream.
std::vector<Share> share_secret(FieldElement m, const SharingParams& params,
                                const FieldModulus& p, SplitRng& rng);

// Lagrange interpolation at zero over any >= t shares with distinct
// evaluation points. Exact in field arithmetic.
FieldElement reconstruct_secret(std::span<const Share> shares,
                                const SharingParams& params,
                                const FieldModulus& p);

// Horner evaluation of q(x) = coeffs[0] + coeffs[1] x + ... mod p.
FieldElement evaluate_poly(std::span<const FieldElement> coeffs, u128 x,
                           const FieldModulus& p);

// L_j(0) for the given pairwise-distinct nonzero evaluation points; shared
// by every element of a grid reconstruction.
std::vector<FieldElement> lagrange_weights_at_zero(
    const std::vector<unsigned>& eval_points, const FieldModulus& p);

// The shares one center holds for a whole matrix: a rows x cols grid of
// q(eval_point) values, one polynomial per element.
struct ShareGrid {
  unsigned eval_point = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FieldElement> values;  // row-major

  FieldElement at(std::size_t r, std::size_t c) const {
    return values[r * cols + c];
  }
};

// A fixed-point-encoded real matrix split across w centers. grids[j] is
// what center j+1 holds; all elements share the same eval-point layout and
// the same scale.
struct SharedTensor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  unsigned scale_exponent = 0;
  SharingParams sharing;
  u128 modulus = 0;
  std::vector<ShareGrid> grids;

  std::size_t size() const { return rows * cols; }
};

// Encodes every entry of x at the given scale and secret-shares it.
// max_addends is forwarded to the encoder's headroom check.
SharedTensor share_tensor(const Eigen::MatrixXd& x, unsigned scale_exponent,
                          const FieldModulus& p, const SharingParams& params,
                          SplitRng& rng, unsigned max_addends = 1);

// Share-local addition (no reconstruction): valid only for grids from
// sharings with identical layout.
ShareGrid add_grids(const ShareGrid& a, const ShareGrid& b, u128 p);

// Elementwise secure addition across all centers. Shapes, scales, sharing
// parameters and eval-point layouts must match.
SharedTensor secure_add(const SharedTensor& a, const SharedTensor& b);

// Multiplies every share by a public integer constant c; reconstructs to
// c * secret mod p.
SharedTensor secure_scale_public(const SharedTensor& a, FieldElement c);

// Field-exact reconstruction from any >= t grids.
std::vector<FieldElement> reconstruct_grid_elements(
    std::span<const ShareGrid> grids, const SharingParams& params,
    const FieldModulus& p);

// Reconstruction plus fixed-point decoding back to reals.
Eigen::MatrixXd reconstruct_tensor(std::span<const ShareGrid> grids,
                                   std::size_t rows, std::size_t cols,
                                   unsigned scale_exponent,
                                   const SharingParams& params,
                                   const FieldModulus& p);

}  // namespace seclr
