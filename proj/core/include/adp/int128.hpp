#pragma once

#include <cstdint>
#include <string>

#include "adp/errors.hpp"

namespace adp {

using int128 = __int128;

std::string to_string(int128 v);
int128 parse_int128(const std::string& s);

// Overflow-checked helpers. The eta-product expansion works near the top of
// the 128-bit range, so every accumulation goes through these.
inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("int128 overflow in addition");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("int128 overflow in multiplication");
  return r;
}

}  // namespace adp
