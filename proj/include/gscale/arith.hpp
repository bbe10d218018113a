#ifndef GSCALE_ARITH_HPP_
#define GSCALE_ARITH_HPP_

// Checked integer helpers shared by the families.

#include <cstdint>
#include <utility>
#include <vector>

#include "gscale/error.hpp"

namespace gscale::arith {

  inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in addition");
    }
    return r;
  }

  inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in subtraction");
    }
    return r;
  }

  inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in multiplication");
    }
    return r;
  }

  inline std::uint64_t umul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in multiplication");
    }
    return r;
  }

  inline std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
      throw OverflowError("integer overflow");
    }
    return static_cast<std::int64_t>(v);
  }

  // Floor division and the matching nonnegative remainder (b > 0).
  inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
      --q;
    }
    return q;
  }

  inline std::int64_t mod(std::int64_t a, std::int64_t b) {
    std::int64_t r = a % b;
    return r < 0 ? r + b : r;
  }

  std::int64_t gcd(std::int64_t a, std::int64_t b);

  // Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
  struct ExtendedGcd {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;
  };
  ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

  bool is_prime(std::int64_t n);

  // Prime factors of n >= 1 with multiplicity, ascending.
  std::vector<std::int64_t> prime_factors(std::int64_t n);

  // The k-th prime, counting from 0 (0 -> 2).
  std::int64_t nth_prime(std::size_t k);

}  // namespace gscale::arith

#endif  // GSCALE_ARITH_HPP_
