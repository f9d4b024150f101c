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

// Two-dimensional patterns and their row-rotation semantics. A pattern of
// shape (m,n) is read as a word of m letters over Sigma^n (one letter per
// row); row_lexmin and row-aperiodicity are the 1D notions on that word.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dbring/errors.hpp"
#include "dbring/numeric.hpp"
#include "dbring/words.hpp"

namespace dbring {

class Pattern {
 public:
  Pattern(std::size_t rows, std::size_t cols, unsigned k)
      : rows_(rows), cols_(cols), k_(Alphabet(k).size), cells_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw ArgumentError("pattern shape must be at least 1x1");
  }

  Pattern(std::size_t rows, std::size_t cols, unsigned k, std::vector<Symbol> cells)
      : rows_(rows), cols_(cols), k_(Alphabet(k).size), cells_(std::move(cells)) {
    if (rows == 0 || cols == 0) throw ArgumentError("pattern shape must be at least 1x1");
    if (cells_.size() != rows * cols) throw ArgumentError("cell count does not match shape");
    for (Symbol s : cells_) {
      if (s >= k_) throw ArgumentError("pattern cell outside alphabet");
    }
  }

  static Pattern from_rows(std::initializer_list<std::initializer_list<unsigned>> rows,
                           unsigned k) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.begin()->size();
    std::vector<Symbol> cells;
    for (const auto& row : rows) {
      if (row.size() != n) throw ArgumentError("ragged pattern rows");
      for (unsigned v : row) {
        if (v >= k) throw ArgumentError("pattern cell outside alphabet");
        cells.push_back(static_cast<Symbol>(v));
      }
    }
    return Pattern(m, n, k, std::move(cells));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned k() const { return k_; }

  Symbol at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Symbol v) {
    if (v >= k_) throw ArgumentError("pattern cell outside alphabet");
    cells_[r * cols_ + c] = v;
  }
  std::span<const Symbol> row(std::size_t r) const {
    return std::span<const Symbol>(cells_).subspan(r * cols_, cols_);
  }
  std::span<const Symbol> cells() const { return cells_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  // Row-major lexicographic order; the shape must match.
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(),
                                                  b.cells_.begin(), b.cells_.end());
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  unsigned k_;
  std::vector<Symbol> cells_;
};

namespace detail {

// A row as one letter of Sigma^n; ordering is lexicographic over its cells.
struct RowRef {
  std::span<const Symbol> cells;
  friend bool operator<(const RowRef& a, const RowRef& b) {
    return std::lexicographical_compare(a.cells.begin(), a.cells.end(), b.cells.begin(),
                                        b.cells.end());
  }
};

inline std::vector<RowRef> row_word(const Pattern& p) {
  std::vector<RowRef> w;
  w.reserve(p.rows());
  for (std::size_t r = 0; r < p.rows(); ++r) w.push_back({p.row(r)});
  return w;
}

}  // namespace detail

// Vertical rotation: row r of the result is row (r + offset) mod m of p.
inline Pattern rotate_rows(const Pattern& p, std::size_t offset) {
  std::vector<Symbol> cells;
  cells.reserve(p.rows() * p.cols());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    const auto row = p.row((r + offset) % p.rows());
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Pattern(p.rows(), p.cols(), p.k(), std::move(cells));
}

// Least vertical rotation and the offset that produced it (smallest on ties).
inline std::pair<Pattern, std::size_t> row_lexmin(const Pattern& p) {
  const auto w = detail::row_word(p);
  const std::size_t offset = least_rotation_offset(std::span<const detail::RowRef>(w));
  return {rotate_rows(p, offset), offset};
}

inline bool is_row_lyndon(const Pattern& p) {
  const auto w = detail::row_word(p);
  return is_lyndon(std::span<const detail::RowRef>(w));
}

inline bool is_row_aperiodic(const Pattern& p) {
  const auto w = detail::row_word(p);
  return is_aperiodic(std::span<const detail::RowRef>(w));
}

// Horizontal concatenation [a | b].
inline Pattern hconcat(const Pattern& a, const Pattern& b) {
  if (a.rows() != b.rows() || a.k() != b.k()) throw ArgumentError("hconcat shape mismatch");
  Pattern out(a.rows(), a.cols() + b.cols(), a.k());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
  }
  return out;
}

// Columns [first, first + count) of p.
inline Pattern column_slice(const Pattern& p, std::size_t first, std::size_t count) {
  if (first + count > p.cols() || count == 0) throw ArgumentError("column slice out of range");
  Pattern out(p.rows(), count, p.k());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < count; ++c) out.set(r, c, p.at(r, first + c));
  }
  return out;
}

// Radix-k row-major integer key of a pattern: the first cell is the most
// significant digit, so key order equals row-major lexicographic order.
struct PatternCode {
  BigInt value;
  std::size_t m = 0;
  std::size_t n = 0;
  unsigned k = 2;

  friend bool operator==(const PatternCode&, const PatternCode&) = default;
};

inline PatternCode encode(const Pattern& p) {
  BigInt v = 0;
  for (Symbol s : p.cells()) v = v * p.k() + s;
  return {v, p.rows(), p.cols(), p.k()};
}

inline Pattern decode(const PatternCode& code) {
  if (code.value < 0 || code.value >= pow_big(code.k, code.m * code.n)) {
    throw ArgumentError("pattern code out of range");
  }
  std::vector<Symbol> cells(code.m * code.n);
  BigInt v = code.value;
  for (std::size_t i = cells.size(); i-- > 0;) {
    cells[i] = static_cast<Symbol>(static_cast<unsigned>(v % code.k));
    v /= code.k;
  }
  return Pattern(code.m, code.n, code.k, std::move(cells));
}

// 64-bit fast path of the same encoding; valid when k^(mn) fits in 64 bits.
inline bool fits_u64_code(unsigned k, std::size_t cells) {
  return pow_u64(k, cells).has_value();
}

inline std::uint64_t encode_u64(std::span<const Symbol> cells, unsigned k) {
  std::uint64_t v = 0;
  for (Symbol s : cells) v = v * k + s;
  return v;
}

// m * M(k^n, m): the number of row-aperiodic (m,n) patterns over k letters.
inline BigInt count_row_aperiodic(std::uint64_t m, std::uint64_t n, unsigned k) {
  if (m < 1 || n < 1 || k < 1) throw ArgumentError("m, n, k must be >= 1");
  return m * necklace_poly(pow_big(k, n), m);
}

// A fraction kept in unreduced form alongside its reduced value.
struct Fraction {
  BigInt numerator;
  BigInt denominator;

  Rational reduced() const { return Rational(numerator, denominator); }
  std::string str() const { return numerator.str() + "/" + denominator.str(); }
};

// Ratio of row-aperiodic to all (m,n) patterns, unreduced as m*M(k^n,m) / k^(mn).
inline Fraction ap_ratio(std::uint64_t m, std::uint64_t n, unsigned k) {
  return {count_row_aperiodic(m, n, k), pow_big(k, m * n)};
}

}  // namespace dbring
