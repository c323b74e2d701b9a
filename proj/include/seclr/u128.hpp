#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace seclr {

using u128 = unsigned __int128;

constexpr u128 u128_from_halves(std::uint64_t hi, std::uint64_t lo) {
  return (static_cast<u128>(hi) << 64) | lo;
}

// Number of bits needed to represent v (0 for v == 0).
int bit_width_u128(u128 v);

std::string u128_to_string(u128 v);

// Parses a decimal unsigned integer; throws Errc::parse_error on any
// non-digit input, empty input, or overflow past 2^128-1.
u128 u128_from_string(std::string_view s);

}  // namespace seclr
