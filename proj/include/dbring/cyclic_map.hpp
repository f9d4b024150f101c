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

// Toroidal symbol arrays and the DBMAP text interchange format:
//
//   DBMAP M=<M> N=<N> m=<m> n=<n> k=<k>
//   <M lines of N symbol characters>
//
// Symbols render through the ramp 0-9, A-Z, a-z, so text maps need k <= 62.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dbring/errors.hpp"
#include "dbring/pattern.hpp"
#include "dbring/words.hpp"

namespace dbring {

inline constexpr std::string_view kSymbolRamp =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

inline char symbol_char(unsigned s) {
  if (s >= kSymbolRamp.size()) throw ArgumentError("symbol has no text rendering (k > 62)");
  return kSymbolRamp[s];
}

inline unsigned char_symbol(char c) {
  const auto pos = kSymbolRamp.find(c);
  if (pos == std::string_view::npos) {
    throw ArgumentError(std::string("invalid symbol character '") + c + "'");
  }
  return static_cast<unsigned>(pos);
}

struct Position {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

class CyclicMap {
 public:
  CyclicMap(std::size_t height, std::size_t width, unsigned k, std::size_t win_rows,
            std::size_t win_cols)
      : height_(height), width_(width), k_(Alphabet(k).size), win_rows_(win_rows),
        win_cols_(win_cols), cells_(height * width, 0) {
    if (height == 0 || width == 0) throw ArgumentError("map must be at least 1x1");
    if (win_rows == 0 || win_cols == 0) throw ArgumentError("window shape must be >= 1");
  }

  CyclicMap(std::size_t height, std::size_t width, unsigned k, std::size_t win_rows,
            std::size_t win_cols, std::vector<Symbol> cells)
      : CyclicMap(height, width, k, win_rows, win_cols) {
    if (cells.size() != height * width) throw ArgumentError("cell count does not match shape");
    for (Symbol s : cells) {
      if (s >= k_) throw ArgumentError("map cell outside alphabet");
    }
    cells_ = std::move(cells);
  }

  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  unsigned k() const { return k_; }
  std::size_t win_rows() const { return win_rows_; }
  std::size_t win_cols() const { return win_cols_; }
  std::span<const Symbol> cells() const { return cells_; }

  // Toroidal read; both indices wrap.
  Symbol at(std::uint64_t r, std::uint64_t c) const {
    return cells_[(r % height_) * width_ + (c % width_)];
  }
  void set(std::size_t r, std::size_t c, Symbol v) {
    if (v >= k_) throw ArgumentError("map cell outside alphabet");
    cells_[(r % height_) * width_ + (c % width_)] = v;
  }

  Pattern window(std::uint64_t r, std::uint64_t c, std::size_t m, std::size_t n) const {
    std::vector<Symbol> cells;
    cells.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) cells.push_back(at(r + i, c + j));
    }
    return Pattern(m, n, k_, std::move(cells));
  }
  Pattern window(std::uint64_t r, std::uint64_t c) const {
    return window(r, c, win_rows_, win_cols_);
  }

  // Column c (top to bottom) as a vector.
  std::vector<Symbol> column(std::size_t c) const {
    std::vector<Symbol> col(height_);
    for (std::size_t r = 0; r < height_; ++r) col[r] = at(r, c);
    return col;
  }

  friend bool operator==(const CyclicMap&, const CyclicMap&) = default;

 private:
  std::size_t height_;
  std::size_t width_;
  unsigned k_;
  std::size_t win_rows_;
  std::size_t win_cols_;
  std::vector<Symbol> cells_;
};

inline void write_dbmap(std::ostream& out, const CyclicMap& map) {
  if (map.k() > kSymbolRamp.size()) throw ArgumentError("DBMAP text needs k <= 62");
  out << "DBMAP M=" << map.height() << " N=" << map.width() << " m=" << map.win_rows()
      << " n=" << map.win_cols() << " k=" << map.k() << '\n';
  std::string line(map.width(), '0');
  for (std::size_t r = 0; r < map.height(); ++r) {
    for (std::size_t c = 0; c < map.width(); ++c) line[c] = symbol_char(map.at(r, c));
    out << line << '\n';
  }
}

inline std::string to_dbmap(const CyclicMap& map) {
  std::ostringstream out;
  write_dbmap(out, map);
  return out.str();
}

namespace detail {

inline std::uint64_t parse_field(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw ArgumentError("DBMAP header: expected " + prefix + "..., got '" + token + "'");
  }
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 18) {
    throw ArgumentError("DBMAP header: bad value for " + key);
  }
  return std::stoull(digits);
}

}  // namespace detail

inline CyclicMap read_dbmap(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ArgumentError("DBMAP: empty input");
  std::istringstream hs(header);
  std::string magic;
  std::string tok[5];
  hs >> magic >> tok[0] >> tok[1] >> tok[2] >> tok[3] >> tok[4];
  std::string extra;
  if (magic != "DBMAP" || !hs || (hs >> extra)) throw ArgumentError("DBMAP: malformed header");
  const auto M = detail::parse_field(tok[0], "M");
  const auto N = detail::parse_field(tok[1], "N");
  const auto m = detail::parse_field(tok[2], "m");
  const auto n = detail::parse_field(tok[3], "n");
  const auto k = detail::parse_field(tok[4], "k");
  if (k < 1 || k > kSymbolRamp.size()) throw ArgumentError("DBMAP: k must be in 1..62");
  if (M == 0 || N == 0 || m == 0 || n == 0) throw ArgumentError("DBMAP: zero dimension");

  std::vector<Symbol> cells;
  cells.reserve(M * N);
  std::string line;
  for (std::uint64_t r = 0; r < M; ++r) {
    if (!std::getline(in, line)) throw ArgumentError("DBMAP: missing rows");
    if (line.size() != N) {
      throw ArgumentError("DBMAP: row " + std::to_string(r) + " has wrong length");
    }
    for (char ch : line) {
      const unsigned s = char_symbol(ch);
      if (s >= k) throw ArgumentError("DBMAP: symbol outside alphabet");
      cells.push_back(static_cast<Symbol>(s));
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty()) throw ArgumentError("DBMAP: trailing data after rows");
  }
  return CyclicMap(M, N, static_cast<unsigned>(k), m, n, std::move(cells));
}

inline CyclicMap parse_dbmap(const std::string& text) {
  std::istringstream in(text);
  return read_dbmap(in);
}

}  // namespace dbring
