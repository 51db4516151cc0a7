#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vcyc {

/// Arbitrary-precision integer used for every matrix and polynomial entry.
using Integer = mpz_class;

/// Parses an optionally signed decimal literal. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Floor division and the matching non-negative remainder (divisor > 0).
Integer floor_div(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // non-negative
  Integer s;
  Integer t;  // s*a + t*b == g
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

bool fits_int64(const Integer& value);
std::int64_t to_int64(const Integer& value);

}  // namespace vcyc
