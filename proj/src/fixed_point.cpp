#include "seclr/fixed_point.hpp"

#include <cmath>

#include "seclr/errors.hpp"

namespace seclr {

FieldElement encode_fixed(double x, unsigned scale_exponent,
                          const FieldModulus& p, unsigned max_addends) {
  require(max_addends >= 1, Errc::invalid_params, "max_addends must be >= 1");
  require(scale_exponent <= 120, Errc::invalid_params,
          "scale_exponent too large for the field");
  require(std::isfinite(x), Errc::overflow, "cannot encode non-finite value");

  // Scaling by a power of two is exact in binary floating point.
  double scaled = std::round(std::ldexp(x, static_cast<int>(scale_exponent)));
  double mag_d = std::fabs(scaled);
  u128 pp = p.value();
  u128 bound = (pp - 1) / (2 * static_cast<u128>(max_addends));
  if (!(mag_d < 0x1.0p127) ||
      static_cast<u128>(mag_d) > bound) {
    fail(Errc::overflow,
         "scaled magnitude exceeds field headroom for " +
             std::to_string(max_addends) + " addends");
  }
  u128 mag = static_cast<u128>(mag_d);
  if (mag == 0) return 0;
  return scaled < 0 ? pp - mag : mag;
}

double decode_fixed(FieldElement e, unsigned scale_exponent,
                    const FieldModulus& p) {
  u128 pp = p.value();
  e %= pp;
  double v;
  if (e > pp / 2) {
    v = -static_cast<double>(pp - e);
  } else {
    v = static_cast<double>(e);
  }
  return std::ldexp(v, -static_cast<int>(scale_exponent));
}

}  // namespace seclr
