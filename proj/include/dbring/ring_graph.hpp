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

// The (m,n)_k ring graph: vertices are row-lexmin (m, n-1) patterns, and
// every row-Lyndon (m,n) pattern contributes exactly one labelled edge
// P1 -> row_lexmin(last n-1 columns of [P1 | R]). Euler cycles of this
// multigraph spell out de Bruijn rings.
//
// Patterns are handled internally as vectors of row codes: a row of w cells
// is one radix-k integer below k^w, and integer order on row codes matches
// lexicographic order on rows. Vertex codes concatenate the row codes.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dbring/cyclic_map.hpp"
#include "dbring/errors.hpp"
#include "dbring/numeric.hpp"
#include "dbring/pattern.hpp"
#include "dbring/words.hpp"

namespace dbring {

class RingGraph {
 public:
  struct Edge {
    std::uint32_t source;
    std::uint32_t target;
    std::uint64_t label;  // column code, top cell most significant
  };

  unsigned m() const { return m_; }
  unsigned n() const { return n_; }
  unsigned k() const { return k_; }

  std::size_t vertex_count() const { return vertex_codes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  // Outgoing edges of v, ordered by label.
  std::span<const Edge> out_edges(std::size_t v) const {
    return std::span<const Edge>(edges_).subspan(out_begin_[v], out_begin_[v + 1] - out_begin_[v]);
  }
  std::size_t out_offset(std::size_t v) const { return out_begin_[v]; }

  std::uint64_t vertex_code(std::size_t v) const { return vertex_codes_[v]; }
  Pattern vertex(std::size_t v) const { return pattern_of(vertex_codes_[v], n_ - 1); }
  Pattern label(std::size_t e) const { return column_of(edges_[e].label); }

  std::optional<std::size_t> find_vertex(const Pattern& p) const {
    if (p.rows() != m_ || p.cols() != n_ - 1 || p.k() != k_) return std::nullopt;
    const auto it = index_.find(encode_u64(p.cells(), k_));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Pattern pattern_of(std::uint64_t code, std::size_t cols) const {
    std::vector<Symbol> cells(m_ * cols);
    for (std::size_t i = cells.size(); i-- > 0;) {
      cells[i] = static_cast<Symbol>(code % k_);
      code /= k_;
    }
    return Pattern(m_, cols, k_, std::move(cells));
  }
  Pattern column_of(std::uint64_t code) const { return pattern_of(code, 1); }

 private:
  friend RingGraph build_ring_graph(unsigned, unsigned, unsigned, std::uint64_t);

  unsigned m_ = 0;
  unsigned n_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint64_t> vertex_codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_begin_;
};

namespace detail {

inline std::uint64_t join_rows(std::span<const std::uint64_t> rows, std::uint64_t row_base) {
  std::uint64_t code = 0;
  for (std::uint64_t r : rows) code = code * row_base + r;
  return code;
}

inline void split_rows(std::uint64_t code, std::uint64_t row_base, std::vector<std::uint64_t>& rows) {
  for (std::size_t r = rows.size(); r-- > 0;) {
    rows[r] = code % row_base;
    code /= row_base;
  }
}

}  // namespace detail

inline RingGraph build_ring_graph(unsigned m, unsigned n, unsigned k,
                                  std::uint64_t budget = kDefaultBudget) {
  if (m < 2 || n < 2 || k < 2) throw ArgumentError("ring graph needs m, n, k >= 2");
  Alphabet alphabet(k);
  const BigInt expected = necklace_poly(pow_big(k, n), m);
  if (expected > budget) throw ResourceError("ring graph edge count exceeds budget");
  const auto all_patterns = pow_u64(k, std::uint64_t{m} * n);
  if (!all_patterns || expected > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("ring graph too large for 64-bit pattern codes");
  }

  RingGraph g;
  g.m_ = m;
  g.n_ = n;
  g.k_ = alphabet.size;

  const std::uint64_t row_base = *pow_u64(k, n - 1);
  const std::uint64_t vertex_space = *pow_u64(row_base, m);
  const std::uint64_t column_space = *pow_u64(k, m);

  std::vector<std::uint64_t> rows(m);
  for (std::uint64_t code = 0; code < vertex_space; ++code) {
    detail::split_rows(code, row_base, rows);
    if (least_rotation_offset(std::span<const std::uint64_t>(rows)) == 0) {
      g.index_.emplace(code, static_cast<std::uint32_t>(g.vertex_codes_.size()));
      g.vertex_codes_.push_back(code);
    }
  }

  std::vector<std::uint64_t> joined(m);
  std::vector<std::uint64_t> tail(m);
  std::vector<unsigned> column(m);
  g.out_begin_.reserve(g.vertex_codes_.size() + 1);
  for (std::size_t v = 0; v < g.vertex_codes_.size(); ++v) {
    g.out_begin_.push_back(g.edges_.size());
    detail::split_rows(g.vertex_codes_[v], row_base, rows);
    const std::size_t vertex_period = rotation_period(std::span<const std::uint64_t>(rows));

    for (std::uint64_t label = 0; label < column_space; ++label) {
      std::uint64_t rest = label;
      for (std::size_t r = m; r-- > 0;) {
        column[r] = static_cast<unsigned>(rest % k);
        rest /= k;
      }
      for (std::size_t r = 0; r < m; ++r) joined[r] = rows[r] * k + column[r];
      if (!is_aperiodic(std::span<const std::uint64_t>(joined))) continue;

      // Labels R and rot_s(R) give the same pattern class exactly when s is a
      // multiple of the vertex's vertical period; keep only the least label.
      bool least = true;
      for (std::size_t s = vertex_period; s < m && least; s += vertex_period) {
        std::uint64_t rotated = 0;
        for (std::size_t r = 0; r < m; ++r) rotated = rotated * k + column[(r + s) % m];
        if (rotated < label) least = false;
      }
      if (!least) continue;

      for (std::size_t r = 0; r < m; ++r) tail[r] = joined[r] % row_base;
      const std::size_t off = least_rotation_offset(std::span<const std::uint64_t>(tail));
      const auto canon = rotate_word(std::span<const std::uint64_t>(tail), off);
      const auto it = g.index_.find(detail::join_rows(canon, row_base));
      if (it == g.index_.end()) throw InternalError("ring graph target is not a vertex");
      g.edges_.push_back({static_cast<std::uint32_t>(v), it->second, label});
    }
  }
  g.out_begin_.push_back(g.edges_.size());

  if (g.edges_.size() != expected) {
    throw InternalError("ring graph edge count differs from M(k^n, m)");
  }
  return g;
}

struct EulerCycle {
  std::size_t start = 0;
  std::vector<std::uint32_t> edges;  // indices into RingGraph::edges()
};

// Hierholzer walk from the all-zero vertex, always leaving a vertex through
// its smallest unused label; closed sub-tours are spliced in where the walk
// backtracks to them.
inline EulerCycle euler_cycle(const RingGraph& g) {
  EulerCycle cycle;
  if (g.edge_count() == 0) return cycle;
  cycle.start = 0;  // vertex codes are sorted, so index 0 is 0^(m,n-1)
  if (g.vertex_code(0) != 0) throw InternalError("zero vertex missing");

  std::vector<std::size_t> cursor(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) cursor[v] = g.out_offset(v);
  const auto edges = g.edges();

  std::vector<std::size_t> vertex_stack{cycle.start};
  std::vector<std::uint32_t> edge_stack;
  cycle.edges.reserve(g.edge_count());
  while (!vertex_stack.empty()) {
    const std::size_t v = vertex_stack.back();
    if (cursor[v] < g.out_offset(v + 1)) {
      const auto e = static_cast<std::uint32_t>(cursor[v]++);
      edge_stack.push_back(e);
      vertex_stack.push_back(edges[e].target);
    } else {
      vertex_stack.pop_back();
      if (!edge_stack.empty()) {
        cycle.edges.push_back(edge_stack.back());
        edge_stack.pop_back();
      }
    }
  }
  std::reverse(cycle.edges.begin(), cycle.edges.end());

  if (cycle.edges.size() != g.edge_count()) {
    throw InternalError("ring graph is not Eulerian: walk covered " +
                        std::to_string(cycle.edges.size()) + " of " +
                        std::to_string(g.edge_count()) + " edges");
  }
  std::size_t at = cycle.start;
  for (auto e : cycle.edges) {
    if (edges[e].source != at) throw InternalError("Euler walk is not contiguous");
    at = edges[e].target;
  }
  if (at != cycle.start) throw InternalError("Euler walk does not close");
  return cycle;
}

inline bool degrees_balanced(const RingGraph& g) {
  std::vector<std::int64_t> balance(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++balance[e.source];
    --balance[e.target];
  }
  return std::all_of(balance.begin(), balance.end(), [](std::int64_t b) { return b == 0; });
}

// Connectivity of the undirected view, via union-find.
inline bool weakly_connected(const RingGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertex_count();
  for (const auto& e : g.edges()) {
    const auto a = find(e.source);
    const auto b = find(e.target);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

namespace detail {

inline std::string render_cells(const Pattern& p) {
  std::string s;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < p.cols(); ++c) s += symbol_char(p.at(r, c));
  }
  return s;
}

}  // namespace detail

// Debug dump, one line per edge: "<source> -> <target> <label>", where
// patterns print row by row separated by '/'.
inline void write_edge_list(std::ostream& out, const RingGraph& g) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    out << detail::render_cells(g.vertex(edge.source)) << " -> "
        << detail::render_cells(g.vertex(edge.target)) << ' '
        << detail::render_cells(g.label(e)) << '\n';
  }
}

}  // namespace dbring
