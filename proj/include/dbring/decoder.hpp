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

// Absolute position from an observed window of a composed map. The window
// splits into its layer-1 and layer-2 digits; each layer window is looked up
// in the table of its (small) ring, giving residues of the row and column
// modulo the layer periods. CRT joins the residues.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dbring/composer.hpp"
#include "dbring/cyclic_map.hpp"
#include "dbring/errors.hpp"
#include "dbring/pattern.hpp"

namespace dbring {

// x = a (mod p), x = b (mod q) for moduli that need not be coprime.
class Crt {
 public:
  Crt() = default;
  Crt(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
    if (p == 0 || q == 0) throw ArgumentError("CRT moduli must be positive");
    g_ = std::gcd(p, q);
    lcm_ = p / g_ * q;
    const std::uint64_t qg = q / g_;
    // inverse of p/g modulo q/g by extended Euclid
    __int128 r0 = static_cast<__int128>((p / g_) % qg), r1 = qg, s0 = 1, s1 = 0;
    while (r1 != 0) {
      const __int128 t = r0 / r1;
      std::swap(r0, r1);
      r1 -= t * r0;
      std::swap(s0, s1);
      s1 -= t * s0;
    }
    if (qg == 1) s0 = 0;
    inv_ = static_cast<std::uint64_t>(((s0 % qg) + qg) % qg);
  }

  std::uint64_t modulus() const { return lcm_; }
  bool coprime() const { return g_ == 1; }

  std::uint64_t solve(std::uint64_t a, std::uint64_t b) const {
    a %= p_;
    b %= q_;
    const __int128 diff = static_cast<__int128>(b) - static_cast<__int128>(a);
    if (diff % static_cast<__int128>(g_) != 0) throw InternalError("CRT residues are inconsistent");
    const __int128 qg = q_ / g_;
    __int128 t = ((diff / static_cast<__int128>(g_)) % qg + qg) % qg;
    t = t * inv_ % qg;
    return static_cast<std::uint64_t>(a + static_cast<__int128>(p_) * t);
  }

 private:
  std::uint64_t p_ = 1, q_ = 1, g_ = 1, lcm_ = 1, inv_ = 0;
};

struct DecodeCost {
  std::uint64_t cell_reads = 0;
  std::uint64_t lookups = 0;
};

class DecoderIndex {
 public:
  using Table = std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>>;

  const CompositionSpec& spec() const { return spec_; }
  const Table& table1() const { return table1_; }
  const Table& table2() const { return table2_; }
  const CyclicMap& layer1() const { return *layer1_; }
  const CyclicMap& layer2() const { return *layer2_; }
  const Crt& row_crt() const { return rows_; }
  const Crt& col_crt() const { return cols_; }
  std::uint64_t height() const { return rows_.modulus(); }
  std::uint64_t width() const { return cols_.modulus(); }

  friend DecoderIndex build_index(const ProductMap& pm);

 private:
  CompositionSpec spec_;
  Table table1_;
  Table table2_;
  std::optional<CyclicMap> layer1_;
  std::optional<CyclicMap> layer2_;
  Crt rows_;
  Crt cols_;
};

namespace detail {

inline std::string layer_key(const Pattern& p) {
  return std::string(p.cells().begin(), p.cells().end());
}

inline DecoderIndex::Table layer_table(const CyclicMap& layer, std::size_t m, std::size_t n,
                                       int which) {
  DecoderIndex::Table t;
  t.reserve(layer.height() * layer.width());
  for (std::uint64_t r = 0; r < layer.height(); ++r) {
    for (std::uint64_t c = 0; c < layer.width(); ++c) {
      if (!t.try_emplace(layer_key(layer.window(r, c, m, n)), r, c).second) {
        throw InternalError("layer " + std::to_string(which) + " repeats a window at (" +
                            std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  }
  return t;
}

}  // namespace detail

inline DecoderIndex build_index(const ProductMap& pm) {
  const auto& s = pm.spec;
  if (pm.layer1.height() != s.m || pm.layer1.width() != s.n1() ||
      pm.layer2.height() != s.m2() || pm.layer2.width() != s.n) {
    throw ArgumentError("layer shapes do not match the composition spec");
  }
  DecoderIndex idx;
  idx.spec_ = s;
  idx.table1_ = detail::layer_table(pm.layer1, s.m, s.n, 1);
  idx.table2_ = detail::layer_table(pm.layer2, s.m, s.n, 2);
  idx.layer1_ = pm.layer1;
  idx.layer2_ = pm.layer2;
  idx.rows_ = Crt(s.m, pm.layer2.height());
  idx.cols_ = Crt(pm.layer1.width(), s.n);
  if (idx.rows_.modulus() != s.M || idx.cols_.modulus() != s.N) {
    throw InternalError("CRT moduli do not span the map");
  }
  return idx;
}

inline std::pair<Pattern, Pattern> split_window(const Pattern& w, unsigned k1, unsigned k2,
                                                DecodeCost* cost = nullptr) {
  Pattern w1(w.rows(), w.cols(), k1);
  Pattern w2(w.rows(), w.cols(), k2);
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) {
      const unsigned v = w.at(r, c);
      if (v >= k1 * k2) throw ArgumentError("window symbol outside the product alphabet");
      w1.set(r, c, static_cast<Symbol>(v / k2));
    }
  }
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) w2.set(r, c, static_cast<Symbol>(w.at(r, c) % k2));
  }
  if (cost) cost->cell_reads += 2 * w.rows() * w.cols();
  return {std::move(w1), std::move(w2)};
}

inline Position decode(const DecoderIndex& idx, const Pattern& w, DecodeCost* cost = nullptr) {
  const auto& s = idx.spec();
  if (w.rows() != s.m || w.cols() != s.n) throw ArgumentError("window has the wrong shape");
  auto [w1, w2] = split_window(w, s.k1, s.k2, cost);
  if (cost) ++cost->lookups;
  const auto a = idx.table1().find(detail::layer_key(w1));
  if (a == idx.table1().end()) throw NotInMapError("window not in map (layer 1 miss)", 1);
  if (cost) ++cost->lookups;
  const auto b = idx.table2().find(detail::layer_key(w2));
  if (b == idx.table2().end()) throw NotInMapError("window not in map (layer 2 miss)", 2);
  const auto [r1, c1] = a->second;
  const auto [r2, c2] = b->second;
  return {idx.row_crt().solve(r1, r2), idx.col_crt().solve(c1, c2)};
}

// The product map's window at (r,c), assembled from the stored layers.
inline Pattern product_window(const DecoderIndex& idx, std::uint64_t r, std::uint64_t c) {
  const auto& s = idx.spec();
  Pattern w(s.m, s.n, s.k());
  for (std::size_t i = 0; i < s.m; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      w.set(i, j, static_cast<Symbol>(idx.layer1().at(r + i, c + j) * s.k2 +
                                      idx.layer2().at(r + i, c + j)));
    }
  }
  return w;
}

struct ProbeSummary {
  std::uint64_t trials = 0;
  std::uint64_t min_reads = 0;
  std::uint64_t max_reads = 0;
  std::uint64_t min_lookups = 0;
  std::uint64_t max_lookups = 0;
};

// Counts decode work over windows spread across the map; every decode must
// cost 2*m*n cell reads and 2 lookups regardless of the map size.
inline ProbeSummary decode_complexity_probe(const DecoderIndex& idx, std::uint64_t trials) {
  ProbeSummary out;
  const std::uint64_t M = idx.height();
  const std::uint64_t N = idx.width();
  const std::uint64_t expect = 2 * std::uint64_t(idx.spec().m) * idx.spec().n;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t r = (t * 7919) % M;
    const std::uint64_t c = (t * 104729) % N;
    DecodeCost cost;
    const Position p = decode(idx, product_window(idx, r, c), &cost);
    if (p != Position{r, c}) throw InternalError("probe decode returned the wrong position");
    if (cost.cell_reads != expect || cost.lookups != 2) {
      throw InternalError("decode cost is not 2*m*n reads plus 2 lookups");
    }
    out.min_reads = t ? std::min(out.min_reads, cost.cell_reads) : cost.cell_reads;
    out.max_reads = std::max(out.max_reads, cost.cell_reads);
    out.min_lookups = t ? std::min(out.min_lookups, cost.lookups) : cost.lookups;
    out.max_lookups = std::max(out.max_lookups, cost.lookups);
    ++out.trials;
  }
  return out;
}

}  // namespace dbring
