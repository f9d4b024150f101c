// Copyright 2026 The dbring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "dbring/errors.hpp"

namespace dbring {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  if (exp > std::numeric_limits<unsigned>::max()) {
    throw ResourceError("exponent too large");
  }
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

// base^exp, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> pow_u64(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::nullopt;
    }
    result *= base;
  }
  return result;
}

inline std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

// Nearest double, ties to even (the IEEE conversion of an exact integer).
inline double to_double_nearest(const BigInt& v) {
  if (v < 0) return -to_double_nearest(BigInt(-v));
  if (v == 0) return 0.0;
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 64) return static_cast<double>(static_cast<std::uint64_t>(v));
  const std::size_t shift = bits - 64;
  auto top = static_cast<std::uint64_t>(v >> shift);
  const BigInt mask = (BigInt(1) << shift) - 1;
  // Fold the discarded tail into the lowest bit as a sticky bit; the
  // hardware u64->double conversion then rounds exactly as required.
  if ((v & mask) != 0) top |= 1u;
  return std::ldexp(static_cast<double>(top), static_cast<int>(shift));
}

inline Rational exact_rational(double d) {
  if (!std::isfinite(d)) throw ArgumentError("non-finite double");
  if (d == 0.0) return Rational(0);
  int exp = 0;
  const double frac = std::frexp(std::fabs(d), &exp);
  BigInt mant(static_cast<std::uint64_t>(std::ldexp(frac, 53)));
  exp -= 53;
  Rational r = exp >= 0 ? Rational(BigInt(mant << exp))
                        : Rational(mant, BigInt(1) << -exp);
  return d < 0 ? Rational(-r) : r;
}

// The exact integer value of an integral double.
inline BigInt exact_integer(double d) {
  const Rational r = exact_rational(d);
  if (denominator(r) != 1) throw ArgumentError("double is not integral");
  return numerator(r);
}

// Fixed-point rendering with `digits` decimals, rounding half away from zero.
inline std::string to_fixed(const Rational& v, unsigned digits) {
  const bool negative = v < 0;
  const BigInt num = boost::multiprecision::abs(numerator(v));
  const BigInt den = denominator(v);
  BigInt scaled = num * pow_big(10, digits);
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(scaled, den, q, r);
  if (2 * r >= den) ++q;
  std::string s = q.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return negative && q != 0 ? "-" + s : s;
}

// Renders the exact binary value of `d`, so 0.1 prints its true expansion.
inline std::string to_fixed(double d, unsigned digits) {
  return to_fixed(exact_rational(d), digits);
}

// Parses a plain decimal literal such as "95.7492828369141".
inline Rational parse_decimal(const std::string& text) {
  if (text.empty()) throw ArgumentError("empty decimal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  }
  BigInt digits = 0;
  std::uint64_t frac_len = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else {
      throw ArgumentError("malformed decimal: " + text);
    }
  }
  if (!seen_digit) throw ArgumentError("malformed decimal: " + text);
  Rational r(digits, pow_big(10, frac_len));
  return negative ? Rational(-r) : r;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  if (a / g > std::numeric_limits<std::uint64_t>::max() / b) {
    throw ResourceError("lcm does not fit in 64 bits");
  }
  return a / g * b;
}

}  // namespace dbring
