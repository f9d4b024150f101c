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

// De Bruijn rings: (m, M(k^n,m); m,n)_k sub-perfect maps of height m,
// spelled out column by column along an Euler cycle of the ring graph, plus
// stair-run trimming that shortens a ring by up to m-1 columns while keeping
// it sub-perfect.

#include <cstdint>
#include <string>
#include <vector>

#include "dbring/cyclic_map.hpp"
#include "dbring/errors.hpp"
#include "dbring/ring_graph.hpp"

namespace dbring {

// Walks the cycle appending one column per edge. After each append the ring
// is rotated vertically by the smallest offset that makes its last n-1
// columns equal the next vertex. The rotation is tracked as a running row
// offset and applied once at the end.
inline CyclicMap build_ring_from_cycle(const RingGraph& g, const EulerCycle& cycle) {
  const std::size_t m = g.m();
  const std::size_t n = g.n();
  const std::size_t width = cycle.edges.size();
  if (width != g.edge_count() || width < n) throw InternalError("cycle does not cover the ring graph");
  if (g.vertex_code(cycle.start) != 0) throw InternalError("cycle must start at the zero vertex");

  // Column-major storage; stored row (r + shift) % m is the current row r.
  std::vector<Symbol> stored(m * width, 0);
  std::size_t shift = 0;
  const auto edges = g.edges();

  for (std::size_t i = 1; i + (n - 1) <= width; ++i) {
    const auto& edge = edges[cycle.edges[i - 1]];
    const std::size_t col = (n - 1) + (i - 1);
    const Pattern label = g.column_of(edge.label);
    for (std::size_t r = 0; r < m; ++r) stored[col * m + (r + shift) % m] = label.at(r, 0);

    const Pattern next = g.vertex(edge.target);
    const std::size_t first = col + 1 - (n - 1);
    bool found = false;
    for (std::size_t s = 0; s < m && !found; ++s) {
      bool match = true;
      for (std::size_t j = 0; j + 1 < n && match; ++j) {
        for (std::size_t r = 0; r < m && match; ++r) {
          match = stored[(first + j) * m + (r + s + shift) % m] == next.at(r, j);
        }
      }
      if (match) {
        shift = (shift + s) % m;
        found = true;
      }
    }
    if (!found) {
      throw InternalError("ring suffix is not a rotation of the next cycle vertex at step " +
                          std::to_string(i));
    }
  }

  CyclicMap ring(m, width, g.k(), m, n);
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t r = 0; r < m; ++r) ring.set(r, c, stored[c * m + (r + shift) % m]);
  }
  return ring;
}

inline CyclicMap build_ring(unsigned m, unsigned n, unsigned k,
                            std::uint64_t budget = kDefaultBudget) {
  const RingGraph g = build_ring_graph(m, n, k, budget);
  return build_ring_from_cycle(g, euler_cycle(g));
}

// i zeros followed by m-i ones, as an (m,1) pattern.
inline Pattern stair_column(std::size_t i, std::size_t m, unsigned k = 2) {
  if (m < 2 || i < 1 || i > m - 1) throw ArgumentError("stair index must satisfy 1 <= i <= m-1");
  if (k < 2) throw ArgumentError("stair columns need k >= 2");
  Pattern col(m, 1, k);
  for (std::size_t r = i; r < m; ++r) col.set(r, 0, 1);
  return col;
}

// Removes j columns from a de Bruijn ring: for i = 1..j, the unique cyclic run
// of exactly n equal columns that are a vertical rotation of stair_column(i)
// loses its first column. Each removal drops exactly one window (the stair
// pattern itself), so the result stays sub-perfect.
inline CyclicMap trim_ring(const CyclicMap& ring, std::size_t j) {
  const std::size_t m = ring.height();
  const std::size_t n = ring.win_cols();
  if (ring.win_rows() != m) throw ArgumentError("trim_ring expects a ring of height m");
  if (j == 0) return ring;
  if (m < 2 || j > m - 1) throw ArgumentError("trim count must satisfy j <= m-1");
  if (ring.k() < 2) throw ArgumentError("trim_ring needs k >= 2");

  std::vector<std::vector<Symbol>> cols;
  cols.reserve(ring.width());
  for (std::size_t c = 0; c < ring.width(); ++c) cols.push_back(ring.column(c));

  for (std::size_t i = 1; i <= j; ++i) {
    const Pattern stair = stair_column(i, m, ring.k());
    std::vector<std::vector<Symbol>> targets;
    for (std::size_t s = 0; s < m; ++s) {
      const Pattern rot = rotate_rows(stair, s);
      targets.emplace_back(rot.cells().begin(), rot.cells().end());
    }
    auto is_target = [&](const std::vector<Symbol>& col) {
      return std::find(targets.begin(), targets.end(), col) != targets.end();
    };

    const std::size_t width = cols.size();
    std::size_t anchor = width;
    for (std::size_t c = 0; c < width; ++c) {
      if (cols[c] != cols[(c + width - 1) % width]) {
        anchor = c;
        break;
      }
    }
    if (anchor == width) throw InternalError("ring has a single repeated column");

    std::vector<std::size_t> runs;
    std::size_t longest = 0;
    for (std::size_t off = 0; off < width;) {
      const std::size_t start = (anchor + off) % width;
      std::size_t len = 1;
      while (off + len < width && cols[(start + len) % width] == cols[start]) ++len;
      if (is_target(cols[start]) && len >= n) {
        runs.push_back(start);
        longest = std::max(longest, len);
      }
      off += len;
    }
    if (runs.size() != 1 || longest != n) {
      throw InternalError("stair run for i=" + std::to_string(i) + " not unique: found " +
                          std::to_string(runs.size()) + " runs, longest " +
                          std::to_string(longest));
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(runs.front()));
  }

  CyclicMap out(m, cols.size(), ring.k(), m, n);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < m; ++r) out.set(r, c, cols[c][r]);
  }
  return out;
}

}  // namespace dbring
