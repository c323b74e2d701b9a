#include "seclr/shamir.hpp"

#include <algorithm>
#include <set>

#include "seclr/errors.hpp"
#include "seclr/fixed_point.hpp"

namespace seclr {

void SharingParams::validate(const FieldModulus& p) const {
  require(t >= 2, Errc::invalid_params,
          "threshold t must be at least 2 (t = 1 gives no secrecy)");
  require(t <= w, Errc::invalid_params, "threshold t cannot exceed w");
  require(static_cast<u128>(w) < p.value(), Errc::invalid_params,
          "w or more share-holders need w distinct nonzero eval points");
}

FieldElement evaluate_poly(std::span<const FieldElement> coeffs, u128 x,
                           const FieldModulus& p) {
  u128 pp = p.value();
  u128 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = add_mod(mul_mod(acc, x, pp), *it % pp, pp);
  }
  return acc;
}

std::vector<Share> share_secret(FieldElement m, const SharingParams& params,
                                const FieldModulus& p, SplitRng& rng) {
  params.validate(p);
  u128 pp = p.value();
  std::vector<FieldElement> coeffs(params.t);
  coeffs[0] = m % pp;
  for (unsigned i = 1; i < params.t; ++i) {
    coeffs[i] = rng.field_uniform(pp);
  }
  std::vector<Share> shares;
  shares.reserve(params.w);
  for (unsigned j = 1; j <= params.w; ++j) {
    shares.push_back({j, evaluate_poly(coeffs, j, p)});
  }
  return shares;
}

std::vector<FieldElement> lagrange_weights_at_zero(
    const std::vector<unsigned>& eval_points, const FieldModulus& p) {
  u128 pp = p.value();
  std::vector<FieldElement> weights(eval_points.size());
  for (std::size_t j = 0; j < eval_points.size(); ++j) {
    u128 num = 1;
    u128 den = 1;
    u128 xj = eval_points[j];
    for (std::size_t k = 0; k < eval_points.size(); ++k) {
      if (k == j) continue;
      u128 xk = eval_points[k];
      num = mul_mod(num, xk, pp);
      den = mul_mod(den, sub_mod(xk % pp, xj % pp, pp), pp);
    }
    weights[j] = mul_mod(num, inv_mod(den, pp), pp);
  }
  return weights;
}

FieldElement reconstruct_secret(std::span<const Share> shares,
                                const SharingParams& params,
                                const FieldModulus& p) {
  require(shares.size() >= params.t, Errc::insufficient_shares,
          "need at least t = " + std::to_string(params.t) + " shares, got " +
              std::to_string(shares.size()));
  std::vector<unsigned> xs;
  std::set<unsigned> seen;
  for (const Share& s : shares) {
    require(s.eval_point >= 1, Errc::invalid_params,
            "eval point 0 would be the secret itself");
    require(seen.insert(s.eval_point).second, Errc::duplicate_eval_point,
            "duplicate eval point " + std::to_string(s.eval_point));
    xs.push_back(s.eval_point);
  }
  u128 pp = p.value();
  std::vector<FieldElement> weights = lagrange_weights_at_zero(xs, p);
  u128 acc = 0;
  for (std::size_t j = 0; j < shares.size(); ++j) {
    acc = add_mod(acc, mul_mod(shares[j].value, weights[j], pp), pp);
  }
  return acc;
}

SharedTensor share_tensor(const Eigen::MatrixXd& x, unsigned scale_exponent,
                          const FieldModulus& p, const SharingParams& params,
                          SplitRng& rng, unsigned max_addends) {
  params.validate(p);
  SharedTensor out;
  out.rows = static_cast<std::size_t>(x.rows());
  out.cols = static_cast<std::size_t>(x.cols());
  out.scale_exponent = scale_exponent;
  out.sharing = params;
  out.modulus = p.value();
  out.grids.resize(params.w);
  for (unsigned j = 0; j < params.w; ++j) {
    out.grids[j].eval_point = j + 1;
    out.grids[j].rows = out.rows;
    out.grids[j].cols = out.cols;
    out.grids[j].values.resize(out.size());
  }
  std::vector<FieldElement> coeffs(params.t);
  for (std::size_t r = 0; r < out.rows; ++r) {
    for (std::size_t c = 0; c < out.cols; ++c) {
      coeffs[0] = encode_fixed(x(static_cast<Eigen::Index>(r),
                                 static_cast<Eigen::Index>(c)),
                               scale_exponent, p, max_addends);
      for (unsigned i = 1; i < params.t; ++i) {
        coeffs[i] = rng.field_uniform(p.value());
      }
      for (unsigned j = 0; j < params.w; ++j) {
        out.grids[j].values[r * out.cols + c] = evaluate_poly(coeffs, j + 1, p);
      }
    }
  }
  return out;
}

ShareGrid add_grids(const ShareGrid& a, const ShareGrid& b, u128 p) {
  require(a.rows == b.rows && a.cols == b.cols, Errc::shape_mismatch,
          "grid shapes differ");
  require(a.eval_point == b.eval_point, Errc::layout_mismatch,
          "grids evaluated at different points");
  ShareGrid out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = add_mod(a.values[i], b.values[i], p);
  }
  return out;
}

namespace {

void check_compatible(const SharedTensor& a, const SharedTensor& b) {
  require(a.rows == b.rows && a.cols == b.cols, Errc::shape_mismatch,
          "tensor shapes differ");
  require(a.scale_exponent == b.scale_exponent, Errc::scale_mismatch,
          "tensors encoded at different fixed-point scales");
  require(a.sharing.t == b.sharing.t && a.sharing.w == b.sharing.w &&
              a.modulus == b.modulus,
          Errc::layout_mismatch, "tensors shared under different parameters");
  for (std::size_t j = 0; j < a.grids.size(); ++j) {
    require(a.grids[j].eval_point == b.grids[j].eval_point,
            Errc::layout_mismatch, "tensors use different eval point layouts");
  }
}

}  // namespace

SharedTensor secure_add(const SharedTensor& a, const SharedTensor& b) {
  check_compatible(a, b);
  SharedTensor out = a;
  for (std::size_t j = 0; j < out.grids.size(); ++j) {
    out.grids[j] = add_grids(a.grids[j], b.grids[j], a.modulus);
  }
  return out;
}

SharedTensor secure_scale_public(const SharedTensor& a, FieldElement c) {
  SharedTensor out = a;
  for (ShareGrid& g : out.grids) {
    for (FieldElement& v : g.values) {
      v = mul_mod(v, c, a.modulus);
    }
  }
  return out;
}

std::vector<FieldElement> reconstruct_grid_elements(
    std::span<const ShareGrid> grids, const SharingParams& params,
    const FieldModulus& p) {
  require(grids.size() >= params.t, Errc::insufficient_shares,
          "need at least t = " + std::to_string(params.t) +
              " centers to reconstruct, got " + std::to_string(grids.size()));
  const ShareGrid& first = grids[0];
  std::vector<unsigned> xs;
  std::set<unsigned> seen;
  for (const ShareGrid& g : grids) {
    require(g.rows == first.rows && g.cols == first.cols, Errc::shape_mismatch,
            "grid shapes differ across centers");
    require(g.eval_point >= 1, Errc::invalid_params, "eval point must be >= 1");
    require(seen.insert(g.eval_point).second, Errc::duplicate_eval_point,
            "duplicate eval point " + std::to_string(g.eval_point));
    xs.push_back(g.eval_point);
  }
  u128 pp = p.value();
  std::vector<FieldElement> weights = lagrange_weights_at_zero(xs, p);
  std::vector<FieldElement> out(first.values.size(), 0);
  for (std::size_t j = 0; j < grids.size(); ++j) {
    u128 wj = weights[j];
    const std::vector<FieldElement>& vals = grids[j].values;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = add_mod(out[i], mul_mod(vals[i], wj, pp), pp);
    }
  }
  return out;
}

Eigen::MatrixXd reconstruct_tensor(std::span<const ShareGrid> grids,
                                   std::size_t rows, std::size_t cols,
                                   unsigned scale_exponent,
                                   const SharingParams& params,
                                   const FieldModulus& p) {
  std::vector<FieldElement> elems = reconstruct_grid_elements(grids, params, p);
  require(elems.size() == rows * cols, Errc::shape_mismatch,
          "grid size does not match requested shape");
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows),
                      static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          decode_fixed(elems[r * cols + c], scale_exponent, p);
    }
  }
  return out;
}

}  // namespace seclr
