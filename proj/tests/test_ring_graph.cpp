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

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>

#include "dbring/ring_graph.hpp"
#include "oracles.hpp"

using namespace dbring;

namespace {

std::vector<oracle::EdgeTriple> edges_of(const RingGraph& g) {
  std::vector<oracle::EdgeTriple> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    out.emplace_back(oracle::rows_of(g.vertex(edge.source)), oracle::rows_of(g.vertex(edge.target)),
                     oracle::rows_of(g.label(e)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("2x2 binary ring graph") {
  const RingGraph g = build_ring_graph(2, 2, 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 6);
  const auto v01 = g.find_vertex(Pattern::from_rows({{0}, {1}}, 2));
  REQUIRE(v01);
  std::size_t loops = 0;
  for (const auto& e : g.out_edges(*v01)) loops += e.target == *v01;
  CHECK(loops == 2);
  CHECK_FALSE(g.find_vertex(Pattern::from_rows({{1}, {0}}, 2)));
}

TEST_CASE("vertex and edge counts of small ring graphs") {
  CHECK(build_ring_graph(3, 2, 2).vertex_count() == 4);
  CHECK(build_ring_graph(3, 2, 2).edge_count() == 20);
  CHECK(build_ring_graph(2, 3, 2).vertex_count() == 10);
  CHECK(build_ring_graph(2, 3, 2).edge_count() == 28);
  CHECK(build_ring_graph(4, 2, 2).edge_count() == 60);
}

TEST_CASE("ring graph matches the literal definition") {
  for (auto [m, n, k] : {std::tuple{2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 3u, 2u}, {2u, 2u, 3u},
                         {4u, 2u, 2u}, {3u, 3u, 2u}, {2u, 2u, 4u}, {4u, 3u, 2u}, {6u, 2u, 2u}}) {
    INFO("m=" << m << " n=" << n << " k=" << k);
    CHECK(edges_of(build_ring_graph(m, n, k)) == oracle::ring_graph_edges(m, n, k));
  }
}

TEST_CASE("vertices are row-lexmin and sorted") {
  const RingGraph g = build_ring_graph(3, 3, 2);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    CHECK(row_lexmin(g.vertex(v)).first == g.vertex(v));
    if (v) CHECK(g.vertex_code(v - 1) < g.vertex_code(v));
  }
  CHECK(g.vertex_code(0) == 0);
}

TEST_CASE("edges biject onto row-lyndon pattern classes") {
  for (auto [m, n, k] : {std::tuple{3u, 2u, 2u}, {2u, 3u, 2u}, {4u, 2u, 2u}, {2u, 2u, 3u}}) {
    const RingGraph g = build_ring_graph(m, n, k);
    std::set<oracle::Grid> classes;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Pattern q = hconcat(g.vertex(g.edges()[e].source), g.label(e));
      CHECK(is_row_lyndon(row_lexmin(q).first));
      classes.insert(oracle::lexmin(oracle::rows_of(q)));
    }
    CHECK(classes.size() == g.edge_count());
    std::size_t lyndon = 0;
    for (const auto& grid : oracle::all_grids(m, n, k)) {
      lyndon += oracle::aperiodic(grid) && oracle::lexmin(grid) == grid;
    }
    CHECK(lyndon == g.edge_count());
  }
}

TEST_CASE("ring graph invariants") {
  for (auto [m, n, k] : {std::tuple{2u, 2u, 2u}, {3u, 3u, 2u}, {5u, 2u, 2u}, {2u, 2u, 5u},
                         {3u, 2u, 3u}}) {
    const RingGraph g = build_ring_graph(m, n, k);
    CHECK(BigInt(g.edge_count()) == necklace_poly(pow_big(k, n), m));
    CHECK(degrees_balanced(g));
    CHECK(weakly_connected(g));
  }
}

TEST_CASE("euler cycle covers each edge once from the zero vertex") {
  for (auto [m, n, k] : {std::tuple{2u, 2u, 2u}, {4u, 2u, 2u}, {3u, 3u, 2u}, {2u, 3u, 3u}}) {
    const RingGraph g = build_ring_graph(m, n, k);
    const EulerCycle c = euler_cycle(g);
    CHECK(c.start == 0);
    REQUIRE(c.edges.size() == g.edge_count());
    std::multiset<std::uint32_t> used(c.edges.begin(), c.edges.end());
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) CHECK(used.count(e) == 1);
    std::size_t at = 0;
    for (auto e : c.edges) {
      CHECK(g.edges()[e].source == at);
      at = g.edges()[e].target;
    }
    CHECK(at == 0);
    // the first step leaves the zero vertex through [0,...,0,1]^T
    Pattern stair(m, 1, k);
    stair.set(m - 1, 0, 1);
    CHECK(g.label(c.edges.front()) == stair);
    CHECK(euler_cycle(g).edges == c.edges);
  }
}

TEST_CASE("ring graph argument and budget errors") {
  CHECK_THROWS_AS(build_ring_graph(1, 2, 2), ArgumentError);
  CHECK_THROWS_AS(build_ring_graph(2, 1, 2), ArgumentError);
  CHECK_THROWS_AS(build_ring_graph(2, 2, 1), ArgumentError);
  CHECK_THROWS_AS(build_ring_graph(5, 5, 2, 1000), ResourceError);
}

TEST_CASE("edge list dump") {
  std::ostringstream out;
  write_edge_list(out, build_ring_graph(2, 2, 2));
  const std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(text.find("0/0 -> 0/1 0/1\n") != std::string::npos);
}
