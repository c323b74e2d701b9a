#pragma once

#include "seclr/u128.hpp"

namespace seclr {

// All protected quantities live in Z_p for a prime p. A FieldElement is a
// plain u128 kept in [0, p) by every operation below.
using FieldElement = u128;

// Prime field order. Requires 3 <= p < 2^127 (the top bit of headroom keeps
// add_mod free of u128 overflow) and primality, checked deterministically:
// Lucas-Lehmer for Mersenne candidates, fixed-base Miller-Rabin otherwise.
class FieldModulus {
 public:
  explicit FieldModulus(u128 p);

  u128 value() const { return p_; }

  // 2^127 - 1, the default field. Large enough that sums of a hundred
  // 2^40-scaled summaries keep comfortable headroom.
  static const FieldModulus& mersenne127();

 private:
  u128 p_;
};

bool is_prime(u128 n);

u128 add_mod(u128 a, u128 b, u128 p);
u128 sub_mod(u128 a, u128 b, u128 p);
u128 mul_mod(u128 a, u128 b, u128 p);
u128 pow_mod(u128 base, u128 exp, u128 p);

// Multiplicative inverse via Fermat; throws Errc::zero_inverse for a == 0.
u128 inv_mod(u128 a, u128 p);

// Embeds a signed magnitude: v >= 0 maps to v, v < 0 maps to p - |v|.
u128 from_signed(long long v, u128 p);

}  // namespace seclr
