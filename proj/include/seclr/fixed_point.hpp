#pragma once

#include "seclr/field.hpp"

namespace seclr {

// Fixed-point embedding of reals into the field: x maps to
// round(x * 2^scale_exponent) mod p, negatives to the upper half of the
// field. max_addends is the number of encoded values that may later be
// summed in the field; encode rejects any x whose scaled magnitude would
// let such a sum reach p/2 and wrap into the negative range.
FieldElement encode_fixed(double x, unsigned scale_exponent,
                          const FieldModulus& p, unsigned max_addends = 1);

// Inverse of encode_fixed up to quantization: values in the upper half of
// the field decode as negatives. Total on the field.
double decode_fixed(FieldElement e, unsigned scale_exponent,
                    const FieldModulus& p);

}  // namespace seclr
