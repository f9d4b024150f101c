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

#include "dbring/words.hpp"
#include "oracles.hpp"

using namespace dbring;

namespace {
Word w(std::vector<Symbol> letters, unsigned k = 2) { return Word(Alphabet(k), std::move(letters)); }
}  // namespace

TEST_CASE("lexmin rotation") {
  CHECK(lexmin_rotation(w({1, 1, 0})).letters == std::vector<Symbol>{0, 1, 1});
  CHECK(lexmin_rotation(w({0, 0})).letters == std::vector<Symbol>{0, 0});
  CHECK(lexmin_rotation(w({1, 0, 1, 0})).letters == std::vector<Symbol>{0, 1, 0, 1});
  CHECK(least_rotation_offset(std::span<const Symbol>(w({1, 0, 1, 0}).letters)) == 1);
  CHECK(least_rotation_offset(std::span<const Symbol>(w({0, 0, 0}).letters)) == 0);
}

TEST_CASE("lyndon and aperiodic words") {
  CHECK(is_lyndon(w({0, 0, 1, 1})));
  CHECK_FALSE(is_lyndon(w({0, 1, 0, 1})));
  CHECK(is_lyndon(w({0})));
  CHECK_FALSE(is_lyndon(w({1, 0})));
  CHECK(is_aperiodic(w({1, 1, 0})));
  CHECK_FALSE(is_aperiodic(w({1, 0, 1, 0})));
  CHECK_FALSE(is_aperiodic(w({0, 0, 0})));
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(w({}), ArgumentError);
  CHECK_THROWS_AS(w({0, 2}), ArgumentError);
  CHECK_THROWS_AS(Alphabet(0), ArgumentError);
}

TEST_CASE("aperiodic iff lexmin is lyndon iff rotations distinct") {
  for (unsigned k = 2; k <= 3; ++k) {
    for (unsigned m = 1; m <= 6; ++m) {
      for (const auto& g : oracle::all_grids(m, 1, k)) {
        std::vector<Symbol> letters;
        for (const auto& row : g) letters.push_back(static_cast<Symbol>(row[0]));
        const Word x = w(letters, k);
        std::set<std::vector<Symbol>> rots;
        for (std::size_t s = 0; s < m; ++s) rots.insert(rotate_word(x.view(), s));
        const bool distinct = rots.size() == m;
        CHECK(is_aperiodic(x) == distinct);
        CHECK(is_lyndon(lexmin_rotation(x)) == distinct);
      }
    }
  }
}

TEST_CASE("mobius function") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(2) == -1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(49) == 0);
}

TEST_CASE("necklace polynomial") {
  CHECK(necklace_poly(2, 3) == 2);
  CHECK(necklace_poly(4, 2) == 6);
  CHECK(necklace_poly(32, 5) == 6710880);
  CHECK(necklace_poly(8, 3) == 168);
  // beyond 64 bits
  const BigInt big = necklace_poly(pow_big(5, 6), 6);
  CHECK(big * 6 < pow_big(5, 36));
  CHECK(big > std::numeric_limits<std::uint64_t>::max() / 1000000);
}

TEST_CASE("brute lyndon counts") {
  CHECK(count_lyndon_brute(2, 3) == 2);
  CHECK(count_lyndon_brute(2, 1) == 2);
  CHECK(count_lyndon_brute(3, 2) == 3);
  CHECK(count_lyndon_brute(3, 4) == oracle::lyndon_count(3, 4));
  CHECK_THROWS_AS(count_lyndon_brute(10, 8), EnumerationTooLarge);
}

TEST_CASE("de bruijn sequences contain every window once") {
  CHECK(debruijn_sequence(2, 1).letters == std::vector<Symbol>{0, 1});
  for (auto [k, n] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 5u}, {4u, 3u}, {5u, 1u}}) {
    const Word s = debruijn_sequence(k, n);
    const std::size_t len = s.size();
    REQUIRE(len == *pow_u64(k, n));
    std::set<std::vector<Symbol>> windows;
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Symbol> win;
      for (std::size_t j = 0; j < n; ++j) win.push_back(s.letters[(i + j) % len]);
      windows.insert(win);
    }
    CHECK(windows.size() == len);
  }
  CHECK(debruijn_sequence(2, 4).letters == debruijn_sequence(2, 4).letters);
  CHECK_THROWS_AS(debruijn_sequence(1, 3), ArgumentError);
  CHECK_THROWS_AS(debruijn_sequence(2, 30, 1000), ResourceError);
}
