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

// Product-alphabet composition of sub-perfect maps. A layer-1 ring over k1
// (height m) and a quarter-turned layer-2 ring over k2 (width n) are tiled to
// a common lcm-sized torus; each cell pairs the two symbols as l1*k2 + l2.
// Trimming the rings by their stair runs makes the periods coprime so the
// product grows to m*N1 by M2*n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/integer.hpp>
#include <json.hpp>

#include "dbring/cyclic_map.hpp"
#include "dbring/errors.hpp"
#include "dbring/numeric.hpp"
#include "dbring/ring_builder.hpp"
#include "dbring/words.hpp"

namespace dbring {

// Quarter turn: out(r, c) = in(c, N-1-r). Window shape (n,m) becomes (m,n).
inline CyclicMap rotate90(const CyclicMap& a) {
  const std::size_t M = a.height();
  const std::size_t N = a.width();
  CyclicMap out(N, M, a.k(), a.win_cols(), a.win_rows());
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < M; ++c) out.set(r, c, a.at(c, N - 1 - r));
  }
  return out;
}

inline CyclicMap compose_product(const CyclicMap& a1, const CyclicMap& a2,
                                 std::uint64_t budget = kDefaultBudget) {
  if (a1.win_rows() != a2.win_rows() || a1.win_cols() != a2.win_cols()) {
    throw ArgumentError("compose_product: window shapes differ");
  }
  const unsigned k = a1.k() * a2.k();
  if (k > kMaxAlphabet) throw ArgumentError("compose_product: product alphabet exceeds 256");
  const std::uint64_t M = lcm_u64(a1.height(), a2.height());
  const std::uint64_t N = lcm_u64(a1.width(), a2.width());
  if (N != 0 && M > budget / N) throw ResourceError("compose_product: map exceeds cell budget");
  CyclicMap out(M, N, k, a1.win_rows(), a1.win_cols());
  for (std::uint64_t r = 0; r < M; ++r) {
    for (std::uint64_t c = 0; c < N; ++c) {
      out.set(r, c, static_cast<Symbol>(a1.at(r, c) * a2.k() + a2.at(r, c)));
    }
  }
  return out;
}

struct CompositionSpec {
  unsigned m = 0;
  unsigned n = 0;
  unsigned k1 = 0;
  unsigned k2 = 0;
  bool trimmed = true;
  BigInt w1;  // M(k1^n, m), width of the layer-1 ring
  BigInt w2;  // M(k2^m, n), width of the layer-2 ring
  std::uint64_t m_prime = 0;
  std::uint64_t m_dprime = 0;
  std::uint64_t n_prime = 0;
  std::uint64_t n_dprime = 0;
  BigInt M;
  BigInt N;

  unsigned k() const { return k1 * k2; }
  BigInt n1() const { return w1 - n_dprime; }  // layer-1 width after trimming
  BigInt m2() const { return w2 - m_dprime; }  // layer-2 height after rotation

  friend bool operator==(const CompositionSpec&, const CompositionSpec&) = default;
};

namespace detail {

inline std::uint64_t trim_count(std::uint64_t residue, std::uint64_t period) {
  if (residue + 1 >= period) return 0;
  return residue >= 1 ? residue - 1 : 1;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace detail

inline CompositionSpec plan_composition(unsigned m, unsigned n, unsigned k1, unsigned k2,
                                        bool trim = true) {
  if (m < 2 || n < 2) throw ArgumentError("plan_composition: need m, n >= 2");
  if (k1 < 2 || k2 < 2) throw ArgumentError("plan_composition: need k1, k2 >= 2");
  CompositionSpec s;
  s.m = m;
  s.n = n;
  s.k1 = k1;
  s.k2 = k2;
  s.trimmed = trim;
  s.w1 = necklace_poly(pow_big(k1, n), m);
  s.w2 = necklace_poly(pow_big(k2, m), n);
  s.m_prime = static_cast<std::uint64_t>(s.w2 % m);
  s.n_prime = static_cast<std::uint64_t>(s.w1 % n);
  if (!trim) {
    s.M = detail::big_lcm(m, s.w2);
    s.N = detail::big_lcm(n, s.w1);
    return s;
  }
  s.m_dprime = detail::trim_count(s.m_prime, m);
  s.n_dprime = detail::trim_count(s.n_prime, n);
  if (s.m_dprime > n - 1) {
    throw InfeasibleError("infeasible trim: m'' = " + std::to_string(s.m_dprime) +
                          " exceeds n-1 = " + std::to_string(n - 1));
  }
  if (s.n_dprime > m - 1) {
    throw InfeasibleError("infeasible trim: n'' = " + std::to_string(s.n_dprime) +
                          " exceeds m-1 = " + std::to_string(m - 1));
  }
  if (boost::multiprecision::gcd(BigInt(m), s.m2()) != 1 ||
      boost::multiprecision::gcd(BigInt(n), s.n1()) != 1) {
    throw InternalError("plan_composition: trimmed periods are not coprime");
  }
  s.M = BigInt(m) * s.m2();
  s.N = BigInt(n) * s.n1();
  return s;
}

struct ProductMap {
  CompositionSpec spec;
  CyclicMap layer1;  // m x N1 over k1
  CyclicMap layer2;  // M2 x n over k2
  CyclicMap map;     // M x N over k1*k2

  // Rebuilds the layers from a materialized product map and its spec, and
  // checks every cell against the pairing rule.
  static ProductMap from_map(const CyclicMap& map, const CompositionSpec& spec) {
    const std::uint64_t M = to_u64(spec.M, "map height");
    const std::uint64_t N = to_u64(spec.N, "map width");
    const std::uint64_t n1 = to_u64(spec.n1(), "layer-1 width");
    const std::uint64_t m2 = to_u64(spec.m2(), "layer-2 height");
    if (map.height() != M || map.width() != N || map.k() != spec.k() ||
        map.win_rows() != spec.m || map.win_cols() != spec.n) {
      throw ArgumentError("map does not match the composition parameters");
    }
    CyclicMap l1(spec.m, n1, spec.k1, spec.m, spec.n);
    CyclicMap l2(m2, spec.n, spec.k2, spec.m, spec.n);
    for (std::uint64_t r = 0; r < spec.m; ++r) {
      for (std::uint64_t c = 0; c < n1; ++c) l1.set(r, c, map.at(r, c) / spec.k2);
    }
    for (std::uint64_t r = 0; r < m2; ++r) {
      for (std::uint64_t c = 0; c < spec.n; ++c) l2.set(r, c, map.at(r, c) % spec.k2);
    }
    for (std::uint64_t r = 0; r < M; ++r) {
      for (std::uint64_t c = 0; c < N; ++c) {
        if (map.at(r, c) != l1.at(r, c) * spec.k2 + l2.at(r, c)) {
          throw ArgumentError("map cell (" + std::to_string(r) + "," + std::to_string(c) +
                              ") breaks the layer structure");
        }
      }
    }
    return ProductMap{spec, std::move(l1), std::move(l2), map};
  }
};

inline ProductMap build_almost_perfect(const CompositionSpec& spec,
                                       std::uint64_t budget = kDefaultBudget) {
  if (spec.M * spec.N > budget) throw ResourceError("almost perfect map exceeds cell budget");
  if (spec.k() > kMaxAlphabet) throw ArgumentError("product alphabet exceeds 256");
  CyclicMap l1 = trim_ring(build_ring(spec.m, spec.n, spec.k1, budget), spec.n_dprime);
  CyclicMap l2 = rotate90(trim_ring(build_ring(spec.n, spec.m, spec.k2, budget), spec.m_dprime));
  CyclicMap map = compose_product(l1, l2, budget);
  if (map.height() != spec.M || map.width() != spec.N) {
    throw InternalError("composed map does not have the planned shape");
  }
  return ProductMap{spec, std::move(l1), std::move(l2), std::move(map)};
}

// k^(p^2) - k^p - p, the side of the square map for prime window size p.
inline BigInt prime_square_size(unsigned k, unsigned p) {
  if (k < 2) throw ArgumentError("prime_square_size: need k >= 2");
  if (!is_prime(p)) throw ArgumentError("prime_square_size: p must be prime");
  const BigInt kp = pow_big(k, p);
  const BigInt kpp = pow_big(k, std::uint64_t(p) * p);
  if ((kpp - kp) % (BigInt(p) * p) != 0) {
    throw InternalError("p^2 does not divide k^(p^2) - k^p");
  }
  const BigInt size = kpp - kp - p;
  if (size != BigInt(p) * (necklace_poly(kp, p) - 1)) {
    throw InternalError("prime square size disagrees with the necklace count");
  }
  return size;
}

inline BigInt square_map_size(unsigned k, unsigned n) {
  if (k < 2 || n < 2) throw ArgumentError("square_map_size: need k, n >= 2");
  const BigInt w = necklace_poly(pow_big(k, n), n);
  const auto residue = static_cast<std::uint64_t>(w % n);
  return BigInt(n) * (w - detail::trim_count(residue, n));
}

// Lower bound on M*N / k^(mn) for the trimmed composition (exact).
inline Rational coverage_lower_bound(unsigned m, unsigned n, unsigned k1, unsigned k2) {
  const std::uint64_t mn = std::uint64_t(m) * n;
  const BigInt a = pow_big(k2, mn);
  const BigInt b = pow_big(k1, mn);
  const Rational f2(a - pow_big(k2, (m / 2 + 1) * std::uint64_t(n)) - BigInt(m) * m + 3 * m, a);
  const Rational f1(b - pow_big(k1, (n / 2 + 1) * std::uint64_t(m)) - BigInt(n) * n + 3 * n, b);
  return f2 * f1;
}

inline nlohmann::ordered_json spec_to_json(const CompositionSpec& s) {
  auto num = [](const BigInt& v) -> nlohmann::ordered_json {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
    return v.str();
  };
  nlohmann::ordered_json j;
  j["m"] = s.m;
  j["n"] = s.n;
  j["k1"] = s.k1;
  j["k2"] = s.k2;
  j["k"] = s.k();
  j["trimmed"] = s.trimmed;
  j["m_prime"] = s.m_prime;
  j["m_dprime"] = s.m_dprime;
  j["n_prime"] = s.n_prime;
  j["n_dprime"] = s.n_dprime;
  j["M"] = num(s.M);
  j["N"] = num(s.N);
  return j;
}

// Re-plans from (m, n, k1, k2, trimmed) and rejects sidecars whose derived
// fields disagree.
inline CompositionSpec spec_from_json(const nlohmann::json& j) {
  CompositionSpec s;
  try {
    s = plan_composition(j.at("m").get<unsigned>(), j.at("n").get<unsigned>(),
                         j.at("k1").get<unsigned>(), j.at("k2").get<unsigned>(),
                         j.value("trimmed", true));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("sidecar: ") + e.what());
  }
  const auto stored = spec_to_json(s);
  for (const auto& [key, value] : j.items()) {
    if (!stored.contains(key)) throw ArgumentError("sidecar: unknown field " + key);
    if (stored[key] != value) throw ArgumentError("sidecar: field " + key + " is inconsistent");
  }
  return s;
}

}  // namespace dbring
