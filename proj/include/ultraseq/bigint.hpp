#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ultraseq {

/// Arbitrary-precision signed integer. Every sequence value and every
/// index that may be derived from a value lives in this type.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Position of a materialized element. Positions derived from values
/// (which may be astronomically far away) are carried as BigInt instead.
using Index = std::int64_t;

inline int sign(const BigInt& v) { return v.sign(); }

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Narrowing conversion; throws std::overflow_error when out of range.
std::int64_t to_int64(const BigInt& v);

std::string to_string(const BigInt& v);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

/// Floor modulus: result in [0, m) for m > 0.
BigInt floor_mod(const BigInt& a, const BigInt& m);

}  // namespace ultraseq
