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

#include <set>

#include "dbring/ring_builder.hpp"
#include "oracles.hpp"

using namespace dbring;

TEST_CASE("ring widths") {
  CHECK(build_ring(2, 2, 2).width() == 6);
  CHECK(build_ring(3, 2, 2).width() == 20);
  CHECK(build_ring(2, 3, 2).width() == 28);
  CHECK(build_ring(2, 2, 3).width() == 36);
  CHECK(build_ring(4, 2, 2).width() == 60);
  const CyclicMap r = build_ring(3, 3, 2);
  CHECK(r.height() == 3);
  CHECK(r.width() == 168);
}

TEST_CASE("2x2 binary ring") {
  const CyclicMap r = build_ring(2, 2, 2);
  CHECK(to_dbmap(r) == "DBMAP M=2 N=6 m=2 n=2 k=2\n011010\n000111\n");
}

TEST_CASE("offset tracking matches physical rotation") {
  for (auto [m, n, k] : {std::tuple{2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 3u, 2u}, {2u, 2u, 3u},
                         {4u, 2u, 2u}, {3u, 3u, 2u}, {5u, 2u, 2u}, {4u, 3u, 2u}}) {
    const RingGraph g = build_ring_graph(m, n, k);
    const EulerCycle c = euler_cycle(g);
    CHECK(oracle::grid_of(build_ring_from_cycle(g, c)) == oracle::algorithm1(g, c));
  }
}

TEST_CASE("rings hold exactly the row-aperiodic patterns") {
  for (auto [m, n, k] : {std::tuple{2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 3u, 2u}, {2u, 2u, 3u},
                         {4u, 2u, 2u}, {3u, 3u, 2u}, {2u, 2u, 4u}, {3u, 2u, 3u}}) {
    const CyclicMap r = build_ring(m, n, k);
    const auto s = oracle::scan(r, m, n);
    CHECK(s.distinct.size() == s.windows);
    std::set<oracle::Grid> want;
    for (const auto& g : oracle::all_grids(m, n, k)) {
      if (oracle::aperiodic(g)) want.insert(g);
    }
    CHECK(s.distinct == want);
  }
}

TEST_CASE("stair columns") {
  CHECK(stair_column(1, 3) == Pattern::from_rows({{0}, {1}, {1}}, 2));
  CHECK(stair_column(2, 3) == Pattern::from_rows({{0}, {0}, {1}}, 2));
  CHECK(stair_column(3, 4) == Pattern::from_rows({{0}, {0}, {0}, {1}}, 2));
  CHECK_THROWS_AS(stair_column(0, 3), ArgumentError);
  CHECK_THROWS_AS(stair_column(3, 3), ArgumentError);
}

TEST_CASE("trimming removes one stair column per step") {
  const CyclicMap r = build_ring(2, 2, 2);
  CHECK(trim_ring(r, 0) == r);
  const CyclicMap t = trim_ring(r, 1);
  CHECK(t.width() == 5);
  const auto s = oracle::scan(t, 2, 2);
  CHECK(s.distinct.size() == 10);
  // the lost window is the stair pattern itself
  const auto full = oracle::scan(r, 2, 2);
  std::vector<oracle::Grid> lost;
  std::set_difference(full.distinct.begin(), full.distinct.end(), s.distinct.begin(),
                      s.distinct.end(), std::back_inserter(lost));
  REQUIRE(lost.size() == 2);
  CHECK(trim_ring(build_ring(3, 2, 2), 1).width() == 19);
  CHECK(trim_ring(build_ring(3, 3, 2), 1).width() == 167);
}

TEST_CASE("trimmed rings stay sub-perfect") {
  for (auto [m, n, k] : {std::tuple{2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 3u, 2u}, {4u, 2u, 2u},
                         {3u, 3u, 2u}, {5u, 2u, 2u}, {4u, 3u, 2u}, {3u, 2u, 3u}, {2u, 2u, 3u}}) {
    const CyclicMap r = build_ring(m, n, k);
    for (std::size_t j = 0; j < m; ++j) {
      INFO("m=" << m << " n=" << n << " k=" << k << " j=" << j);
      const CyclicMap t = trim_ring(r, j);
      CHECK(t.width() == r.width() - j);
      const auto s = oracle::scan(t, m, n);
      CHECK(s.distinct.size() == s.windows);
      // only stair windows (and their row rotations) go missing
      CHECK(oracle::scan(r, m, n).distinct.size() - s.distinct.size() == m * j);
    }
  }
}

TEST_CASE("trim argument errors") {
  const CyclicMap r = build_ring(3, 2, 2);
  CHECK_THROWS_AS(trim_ring(r, 3), ArgumentError);
  CyclicMap bad(3, 20, 2, 2, 2);
  CHECK_THROWS_AS(trim_ring(bad, 1), ArgumentError);
  CyclicMap zeros(3, 20, 2, 3, 2);
  CHECK_THROWS_AS(trim_ring(zeros, 1), InternalError);
}
