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

#include "dbring/composer.hpp"
#include "dbring/stats.hpp"
#include "dbring/verifier.hpp"

using namespace dbring;

namespace {

// Periodic words of length m over k letters, by enumeration.
std::uint64_t periodic_words(unsigned k, unsigned m) {
  const std::uint64_t total = *pow_u64(k, m);
  std::vector<unsigned> w(m);
  std::uint64_t periodic = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (unsigned i = 0; i < m; ++i) {
      w[i] = x % k;
      x /= k;
    }
    for (unsigned p = 1; p < m; ++p) {
      if (m % p) continue;
      bool same = true;
      for (unsigned i = 0; i + p < m && same; ++i) same = w[i] == w[i + p];
      if (same) {
        ++periodic;
        break;
      }
    }
  }
  return periodic;
}

}  // namespace

TEST_CASE("necklace polynomial equals lyndon enumeration") {
  for (unsigned k = 2; k <= 6; ++k) {
    for (unsigned m = 2; m <= 6; ++m) CHECK(necklace_poly(k, m) == count_lyndon_brute(k, m));
  }
}

TEST_CASE("necklace polynomial bounds") {
  for (unsigned k = 2; k <= 8; ++k) {
    for (unsigned m = 2; m <= 8; ++m) {
      const Bounds b = necklace_bounds(k, m);
      const Rational v(necklace_poly(k, m));
      CHECK(b.lower < v);
      CHECK(v < b.upper);
    }
  }
}

TEST_CASE("share of periodic words") {
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned m = 2; m <= 10; ++m) {
      const Bounds b = periodic_fraction(k, m);
      CHECK(b.lower == Rational(periodic_words(k, m), pow_big(k, m)));
      CHECK(b.lower <= b.upper);
    }
  }
}

TEST_CASE("row-aperiodic ratio lower bound") {
  for (unsigned m = 2; m <= 6; ++m) {
    for (unsigned n = 2; n <= 6; ++n) {
      for (unsigned k = 2; k <= 5; ++k) CHECK(ap_ratio(m, n, k).reduced() > ap_lower_bound(m, n, k));
    }
  }
}

TEST_CASE("composed coverage exceeds the product bound") {
  std::size_t tested = 0;
  for (unsigned m = 2; m <= 7; ++m) {
    for (unsigned n = 2; n <= 7; ++n) {
      for (unsigned k1 = 2; k1 <= 5; ++k1) {
        for (unsigned k2 = 2; k2 <= 5; ++k2) {
          CompositionSpec s;
          try {
            s = plan_composition(m, n, k1, k2);
          } catch (const InfeasibleError&) {
            continue;
          }
          const Rational cov(s.M * s.N, pow_big(s.k(), std::uint64_t(m) * n));
          CHECK(cov > coverage_lower_bound(m, n, k1, k2));
          CHECK(cov < 1);
          ++tested;
        }
      }
    }
  }
  CHECK(tested > 300);
}

TEST_CASE("built maps are sub-perfect with full coverage") {
  for (auto [m, n, k1, k2] : {std::tuple{2u, 2u, 2u, 2u}, {3u, 2u, 2u, 2u}, {2u, 3u, 2u, 2u},
                              {2u, 2u, 3u, 2u}, {2u, 2u, 2u, 3u}, {3u, 3u, 2u, 2u},
                              {4u, 2u, 2u, 2u}, {2u, 4u, 2u, 2u}, {3u, 2u, 3u, 2u}}) {
    for (bool trim : {true, false}) {
      const CompositionSpec s = plan_composition(m, n, k1, k2, trim);
      if (s.M * s.N > 1'000'000) continue;
      INFO(m << n << k1 << k2 << trim);
      const auto rep = verify(build_almost_perfect(s).map, m, n);
      CHECK(rep.is_sub_perfect);
      CHECK(BigInt(rep.distinct_windows) == s.M * s.N);
    }
  }
}

TEST_CASE("comparison bound grid") {
  for (unsigned k = 2; k <= 6; ++k) {
    for (unsigned d = 1; d < k; ++d) {
      for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned n = 1; n <= 4; ++n) {
          const auto c = my_comparison(d, k, m, n);
          CHECK(c.value <= c.bound);
          if (m * n > 1) CHECK((c.value == c.bound) == (d == k - 1));
        }
      }
    }
  }
}

TEST_CASE("ring graph invariants over a grid") {
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned n = 2; n <= 3; ++n) {
      for (unsigned k = 2; k <= 3; ++k) {
        if (necklace_poly(pow_big(k, n), m) > 20000) continue;
        const RingGraph g = build_ring_graph(m, n, k);
        CHECK(BigInt(g.edge_count()) == necklace_poly(pow_big(k, n), m));
        CHECK(degrees_balanced(g));
        CHECK(weakly_connected(g));
        const CyclicMap r = build_ring_from_cycle(g, euler_cycle(g));
        CHECK(verify(r, m, n).is_de_bruijn_ring);
        for (std::size_t j = 1; j < m; ++j) CHECK(verify(trim_ring(r, j), m, n).is_sub_perfect);
      }
    }
  }
}
