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

// Counting tables and bounds in exact arithmetic.
//
// The published tables were evidently produced in double precision, which
// shows in their largest entries. Besides the exact values, every row also
// carries a "printed" rendering that replays that double computation:
// M(K,m) summed as doubles over divisors in ascending order, products and
// quotients rounded per operation, and the final percentage printed from the
// exact binary value of the double (15 decimals, half up).

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dbring/composer.hpp"
#include "dbring/errors.hpp"
#include "dbring/numeric.hpp"
#include "dbring/pattern.hpp"
#include "dbring/words.hpp"

namespace dbring {

inline constexpr unsigned kPercentDigits = 15;

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

namespace detail {

inline double necklace_double(const BigInt& K, std::uint64_t m) {
  const double base = to_double_nearest(K);
  double s = 0.0;
  for (std::uint64_t d : divisors(m)) s += mobius(m / d) * std::pow(base, static_cast<double>(d));
  return s / static_cast<double>(m);
}

inline BigInt printed_integer(double d) { return exact_integer(std::trunc(d)); }

inline void require_replay(bool ok) {
  if (!ok) throw ArgumentError("double-precision replay overflows for this row");
}

inline void check_range(const Range& r, unsigned min, const char* what) {
  if (r.lo < min || r.hi < r.lo) {
    throw ArgumentError(std::string("invalid ") + what + " range");
  }
}

}  // namespace detail

struct Table1Row {
  unsigned m = 0;
  unsigned n = 0;
  unsigned k = 0;
  Fraction exact;    // m*M(k^n,m) / k^(mn), unreduced
  Fraction printed;  // double-precision replay, when representable
  bool has_printed = false;
};

inline Table1Row table1_row(unsigned m, unsigned n, unsigned k) {
  Table1Row row{m, n, k, ap_ratio(m, n, k), {}, false};
  const double num = static_cast<double>(m) * detail::necklace_double(pow_big(k, n), m);
  const double den = to_double_nearest(row.exact.denominator);
  if (std::isfinite(num) && std::isfinite(den)) {
    row.printed = {detail::printed_integer(num), detail::printed_integer(den)};
    row.has_printed = true;
  }
  return row;
}

// Row order: m, then n, then k.
inline std::vector<Table1Row> table1(Range m, Range n, Range k) {
  detail::check_range(m, 1, "m");
  detail::check_range(n, 1, "n");
  detail::check_range(k, 1, "k");
  std::vector<Table1Row> rows;
  for (unsigned a = m.lo; a <= m.hi; ++a) {
    for (unsigned b = n.lo; b <= n.hi; ++b) {
      for (unsigned c = k.lo; c <= k.hi; ++c) rows.push_back(table1_row(a, b, c));
    }
  }
  return rows;
}

struct Table2Row {
  unsigned k = 0;
  unsigned n = 0;
  BigInt N;        // side of the square sub-perfect map
  BigInt Ntilde;   // k^(n^2)
  Rational ratio;  // N^2 / Ntilde^2
  std::string percent;
  BigInt printed_N;
  BigInt printed_Ntilde;
  std::string printed_percent;
  bool has_printed = false;
};

inline Table2Row table2_row(unsigned k, unsigned n) {
  Table2Row row;
  row.k = k;
  row.n = n;
  row.N = square_map_size(k, n);
  row.Ntilde = pow_big(k, std::uint64_t(n) * n);
  row.ratio = Rational(row.N * row.N, row.Ntilde * row.Ntilde);
  row.percent = to_fixed(row.ratio * 100, kPercentDigits);

  const BigInt w = necklace_poly(pow_big(k, n), n);
  const auto trim = detail::trim_count(static_cast<std::uint64_t>(w % n), n);
  const double nd =
      static_cast<double>(n) * (detail::necklace_double(pow_big(k, n), n) - static_cast<double>(trim));
  const double square = to_double_nearest(row.Ntilde * row.Ntilde);
  const double pct = nd * nd / square * 100.0;
  const double ntilde = to_double_nearest(row.Ntilde);
  if (std::isfinite(nd) && std::isfinite(ntilde) && std::isfinite(pct)) {
    row.printed_N = detail::printed_integer(nd);
    row.printed_Ntilde = detail::printed_integer(ntilde);
    row.printed_percent = to_fixed(pct, kPercentDigits);
    row.has_printed = true;
  }
  return row;
}

// Row order: k, then n.
inline std::vector<Table2Row> table2(Range k, Range n) {
  detail::check_range(k, 2, "k");
  detail::check_range(n, 2, "n");
  std::vector<Table2Row> rows;
  for (unsigned a = k.lo; a <= k.hi; ++a) {
    for (unsigned b = n.lo; b <= n.hi; ++b) rows.push_back(table2_row(a, b));
  }
  return rows;
}

// A plotted percentage agrees with the exact ratio when it is within one
// unit of its last printed decimal.
inline bool plotted_percent_matches(const std::string& plotted, const Rational& ratio) {
  const auto dot = plotted.find('.');
  const std::uint64_t decimals = dot == std::string::npos ? 0 : plotted.size() - dot - 1;
  Rational diff = parse_decimal(plotted) - ratio * 100;
  if (diff < 0) diff = -diff;
  return diff <= Rational(1, pow_big(10, decimals));
}

struct MyComparison {
  Rational value;  // d^(mn-1) * k / k^(mn)
  Rational bound;  // ((k-1)/k)^(mn-1)
};

inline MyComparison my_comparison(unsigned d, unsigned k, unsigned m, unsigned n) {
  if (d == 0 || d >= k) throw ArgumentError("my_comparison: need 0 < d < k");
  if (m == 0 || n == 0) throw ArgumentError("my_comparison: need m, n >= 1");
  const std::uint64_t mn = std::uint64_t(m) * n;
  MyComparison out{Rational(pow_big(d, mn - 1) * k, pow_big(k, mn)),
                   Rational(pow_big(k - 1, mn - 1), pow_big(k, mn - 1))};
  if (out.value > out.bound) throw InternalError("comparison value exceeds its bound");
  return out;
}

struct Bounds {
  Rational lower;
  Rational upper;
};

// (k^m - k^(floor(m/2)+1))/m and k^m/m, the strict bounds around M(k,m).
inline Bounds necklace_bounds(unsigned k, unsigned m) {
  if (k < 1 || m < 1) throw ArgumentError("necklace_bounds: need k, m >= 1");
  const BigInt km = pow_big(k, m);
  return {Rational(km - pow_big(k, m / 2 + 1), m), Rational(km, m)};
}

// Share of length-m words that are periodic, and the bound k^(1-ceil(m/2)).
inline Bounds periodic_fraction(unsigned k, unsigned m) {
  if (k < 2 || m < 1) throw ArgumentError("periodic_fraction: need k >= 2, m >= 1");
  const BigInt km = pow_big(k, m);
  const Rational frac = 1 - Rational(BigInt(m) * necklace_poly(k, m), km);
  const std::uint64_t up = (m + 1) / 2;
  return {frac, Rational(1, pow_big(k, up - 1))};
}

// (k^(mn) - k^((floor(m/2)+1)n)) / k^(mn), below ap(m,n,k).
inline Rational ap_lower_bound(unsigned m, unsigned n, unsigned k) {
  const BigInt total = pow_big(k, std::uint64_t(m) * n);
  return Rational(total - pow_big(k, std::uint64_t(m / 2 + 1) * n), total);
}

inline void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows,
                             bool as_printed) {
  out << "m,n,k,numerator,denominator\n";
  for (const auto& r : rows) {
    if (as_printed) detail::require_replay(r.has_printed);
    const Fraction& f = as_printed ? r.printed : r.exact;
    out << r.m << ',' << r.n << ',' << r.k << ',' << f.numerator << ',' << f.denominator << '\n';
  }
}

inline void write_table2_csv(std::ostream& out, const std::vector<Table2Row>& rows,
                             bool as_printed) {
  out << "k,n,N,Ntilde,percent\n";
  for (const auto& r : rows) {
    if (as_printed) detail::require_replay(r.has_printed);
    out << r.k << ',' << r.n << ',' << (as_printed ? r.printed_N : r.N) << ','
        << (as_printed ? r.printed_Ntilde : r.Ntilde) << ','
        << (as_printed ? r.printed_percent : r.percent) << '\n';
  }
}

inline void write_table1_text(std::ostream& out, const std::vector<Table1Row>& rows,
                              bool as_printed) {
  std::size_t width = 0;
  for (const auto& r : rows) {
    if (as_printed) detail::require_replay(r.has_printed);
    width = std::max(width, (as_printed ? r.printed : r.exact).str().size());
  }
  out << " m  n  k  ratio\n";
  for (const auto& r : rows) {
    const std::string f = (as_printed ? r.printed : r.exact).str();
    out << ' ' << r.m << "  " << r.n << "  " << r.k << "  " << std::string(width - f.size(), ' ')
        << f << '\n';
  }
}

inline void write_table2_text(std::ostream& out, const std::vector<Table2Row>& rows,
                              bool as_printed) {
  std::size_t width = 0;
  for (const auto& r : rows) {
    if (as_printed) detail::require_replay(r.has_printed);
    const auto f = (as_printed ? r.printed_N : r.N).str() + "/" +
                   (as_printed ? r.printed_Ntilde : r.Ntilde).str();
    width = std::max(width, f.size());
  }
  out << " k  n  N/Ntilde" << std::string(width > 8 ? width - 8 : 0, ' ') << "  percent\n";
  for (const auto& r : rows) {
    const auto f = (as_printed ? r.printed_N : r.N).str() + "/" +
                   (as_printed ? r.printed_Ntilde : r.Ntilde).str();
    out << ' ' << r.k << "  " << r.n << "  " << f << std::string(width - f.size(), ' ') << "  "
        << (as_printed ? r.printed_percent : r.percent) << "%\n";
  }
}

}  // namespace dbring
