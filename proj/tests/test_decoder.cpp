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

#include "dbring/decoder.hpp"
#include "dbring/verifier.hpp"
#include "oracles.hpp"

using namespace dbring;

namespace {

void roundtrip_all(const ProductMap& pm) {
  const DecoderIndex idx = build_index(pm);
  std::uint64_t wrong = 0;
  for (std::uint64_t r = 0; r < pm.map.height(); ++r) {
    for (std::uint64_t c = 0; c < pm.map.width(); ++c) {
      wrong += decode(idx, pm.map.window(r, c)) != Position{r, c};
    }
  }
  CHECK(wrong == 0);
}

}  // namespace

TEST_CASE("CRT reconstruction") {
  const Crt crt(3, 28);
  CHECK(crt.solve(2, 5) == 5);
  CHECK(crt.modulus() == 84);
  for (std::uint64_t x = 0; x < 84; ++x) CHECK(crt.solve(x % 3, x % 28) == x);
  const Crt g(4, 6);
  CHECK(g.modulus() == 12);
  CHECK_FALSE(g.coprime());
  for (std::uint64_t x = 0; x < 12; ++x) CHECK(g.solve(x % 4, x % 6) == x);
  CHECK_THROWS_AS(g.solve(1, 2), InternalError);
  CHECK(Crt(1, 5).solve(0, 3) == 3);
}

TEST_CASE("window splitting") {
  const Pattern w = Pattern::from_rows({{3, 2}, {1, 0}}, 4);
  auto [a, b] = split_window(w, 2, 2);
  CHECK(a == Pattern::from_rows({{1, 1}, {0, 0}}, 2));
  CHECK(b == Pattern::from_rows({{1, 0}, {1, 0}}, 2));
  auto [z1, z2] = split_window(Pattern(2, 3, 6), 2, 3);
  CHECK(z1 == Pattern(2, 3, 2));
  CHECK(z2 == Pattern(2, 3, 3));
  CHECK_THROWS_AS(split_window(Pattern::from_rows({{5}}, 6), 2, 2), ArgumentError);
  // recombination
  const Pattern v = Pattern::from_rows({{5, 0, 4}, {1, 2, 3}}, 6);
  auto [v1, v2] = split_window(v, 2, 3);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(v1.at(r, c) * 3 + v2.at(r, c) == v.at(r, c));
  }
}

TEST_CASE("index sizes") {
  const DecoderIndex a = build_index(build_almost_perfect(plan_composition(2, 2, 2, 2)));
  CHECK(a.table1().size() == 10);
  CHECK(a.table2().size() == 10);
  const DecoderIndex b = build_index(build_almost_perfect(plan_composition(3, 2, 2, 2)));
  CHECK(b.table1().size() == 57);
  CHECK(b.table2().size() == 56);
  CHECK(b.table1().size() * b.table2().size() == 84 * 38);
  const DecoderIndex c = build_index(build_almost_perfect(plan_composition(3, 3, 2, 2)));
  CHECK(c.table1().size() == 501);
  CHECK(c.table1().size() * c.table2().size() == 501 * 501);
}

TEST_CASE("decode every position") {
  const ProductMap pm = build_almost_perfect(plan_composition(2, 2, 2, 2));
  const DecoderIndex idx = build_index(pm);
  CHECK(decode(idx, pm.map.window(0, 0)) == Position{0, 0});
  roundtrip_all(pm);
  roundtrip_all(build_almost_perfect(plan_composition(3, 2, 2, 2)));
  roundtrip_all(build_almost_perfect(plan_composition(3, 2, 2, 2, false)));
  roundtrip_all(build_almost_perfect(plan_composition(2, 3, 2, 3)));
  roundtrip_all(build_almost_perfect(plan_composition(2, 2, 3, 2, false)));
}

TEST_CASE("uncovered windows miss") {
  const ProductMap pm = build_almost_perfect(plan_composition(3, 2, 2, 2));
  const DecoderIndex idx = build_index(pm);
  try {
    decode(idx, Pattern(3, 2, 4));
    FAIL("constant window decoded");
  } catch (const NotInMapError& e) {
    CHECK(e.layer() == 1);
  }
  // decode fails exactly on the patterns the map lacks
  std::set<oracle::Grid> present = oracle::scan(pm.map, 3, 2).distinct;
  std::uint64_t checked = 0;
  for (std::uint64_t code = 0; code < 4096; code += 5) {
    const Pattern w = decode(PatternCode{code, 3, 2, 4});
    bool hit = true;
    try {
      const Position p = dbring::decode(idx, w);
      CHECK(pm.map.window(p.row, p.col) == w);
    } catch (const NotInMapError&) {
      hit = false;
    }
    CHECK(hit == (present.count(oracle::rows_of(w)) == 1));
    ++checked;
  }
  CHECK(checked > 800);
  CHECK_THROWS_AS(dbring::decode(idx, Pattern(2, 2, 4)), ArgumentError);
}

TEST_CASE("decode cost does not depend on the map size") {
  DecodeCost small, large;
  const DecoderIndex a = build_index(build_almost_perfect(plan_composition(3, 3, 2, 2)));
  const DecoderIndex b = build_index(build_almost_perfect(plan_composition(3, 3, 2, 2, false)));
  dbring::decode(a, product_window(a, 100, 200), &small);
  dbring::decode(b, product_window(b, 3, 4), &large);
  CHECK(small.cell_reads == 18);
  CHECK(small.lookups == 2);
  CHECK(small.cell_reads == large.cell_reads);
  CHECK(small.lookups == large.lookups);

  const auto p = decode_complexity_probe(a, 200);
  CHECK(p.trials == 200);
  CHECK(p.min_reads == 18);
  CHECK(p.max_reads == 18);
  CHECK(p.max_lookups == 2);
  const auto q = decode_complexity_probe(build_index(build_almost_perfect(plan_composition(2, 2, 2, 2))), 50);
  CHECK(q.max_reads == 8);

  DecodeCost miss;
  CHECK_THROWS_AS(dbring::decode(a, Pattern(3, 3, 4), &miss), NotInMapError);
  CHECK(miss.cell_reads == 18);
  CHECK(miss.lookups == 1);
}
