#pragma once

#include <cstdint>
#include <stdexcept>

namespace horikawa {

using integer = std::int64_t;

namespace checked {

inline integer add(integer a, integer b) {
  integer r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline integer sub(integer a, integer b) {
  integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline integer mul(integer a, integer b) {
  integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline integer neg(integer a) { return sub(0, a); }

}  // namespace checked
}  // namespace horikawa
