#include "seclr/u128.hpp"

#include <algorithm>

#include "seclr/errors.hpp"

namespace seclr {

int bit_width_u128(u128 v) {
  int n = 0;
  while (v != 0) {
    v >>= 1;
    ++n;
  }
  return n;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

u128 u128_from_string(std::string_view s) {
  require(!s.empty(), Errc::parse_error, "empty integer literal");
  constexpr u128 kMax = ~static_cast<u128>(0);
  u128 v = 0;
  for (char c : s) {
    require(c >= '0' && c <= '9', Errc::parse_error,
            "invalid digit in integer literal: " + std::string(s));
    unsigned d = static_cast<unsigned>(c - '0');
    require(v <= (kMax - d) / 10, Errc::parse_error,
            "integer literal exceeds 128 bits: " + std::string(s));
    v = v * 10 + d;
  }
  return v;
}

}  // namespace seclr
