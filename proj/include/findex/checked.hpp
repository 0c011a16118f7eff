#pragma once

#include <cstdint>

#include "findex/error.hpp"

namespace findex {

/// All index values are exact 64-bit integers; arithmetic that would wrap
/// raises errc::overflow instead.
using index_t = std::int64_t;

namespace checked {

inline index_t add(index_t a, index_t b) {
  index_t r;
  if (__builtin_add_overflow(a, b, &r))
    raise(errc::overflow, "integer overflow in addition");
  return r;
}

inline index_t sub(index_t a, index_t b) {
  index_t r;
  if (__builtin_sub_overflow(a, b, &r))
    raise(errc::overflow, "integer overflow in subtraction");
  return r;
}

inline index_t mul(index_t a, index_t b) {
  index_t r;
  if (__builtin_mul_overflow(a, b, &r))
    raise(errc::overflow, "integer overflow in multiplication");
  return r;
}

inline index_t pow(index_t base, int exponent) {
  if (base == 0)
    return exponent == 0 ? 1 : 0;
  if (base == 1)
    return 1;
  // any larger base overflows within 63 steps, so the loop is bounded
  index_t r = 1;
  for (int i = 0; i < exponent; ++i)
    r = mul(r, base);
  return r;
}

} // namespace checked
} // namespace findex
