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

// Exhaustive cyclic window scan. Every (m,n) window of an (M,N) torus is
// keyed by its radix-k code; a repeated key means the map is not sub-perfect.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "dbring/cyclic_map.hpp"
#include "dbring/errors.hpp"
#include "dbring/numeric.hpp"
#include "dbring/pattern.hpp"
#include "dbring/ring_graph.hpp"
#include "dbring/words.hpp"

namespace dbring {

inline constexpr std::size_t kWitnessCap = 100;

struct DuplicateWitness {
  Pattern pattern;
  Position first;
  Position second;
};

struct VerificationReport {
  std::uint64_t M = 0;
  std::uint64_t N = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  unsigned k = 0;
  std::uint64_t distinct_windows = 0;
  std::uint64_t duplicate_count = 0;  // windows that repeat an earlier one
  std::vector<DuplicateWitness> duplicate_witnesses;
  Fraction coverage_ratio;
  bool is_sub_perfect = false;
  bool is_perfect = false;
  bool is_de_bruijn_ring = false;
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

namespace detail {

inline std::string window_key_bytes(const CyclicMap& map, std::uint64_t r, std::uint64_t c,
                                    std::size_t m, std::size_t n) {
  std::string key(m * n, '\0');
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) key[i * n + j] = static_cast<char>(map.at(r + i, c + j));
  }
  return key;
}

inline std::uint64_t window_key_u64(const CyclicMap& map, std::uint64_t r, std::uint64_t c,
                                    std::size_t m, std::size_t n) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) v = v * map.k() + map.at(r + i, c + j);
  }
  return v;
}

// Keys for all windows in row-major position order. Rows are split across
// threads; the order of the result never depends on the split.
template <typename Key, typename F>
std::vector<Key> window_keys(const CyclicMap& map, unsigned threads, F key_at) {
  const std::uint64_t M = map.height();
  const std::uint64_t N = map.width();
  std::vector<Key> keys(M * N);
  auto work = [&](std::uint64_t r0, std::uint64_t r1) {
    for (std::uint64_t r = r0; r < r1; ++r) {
      for (std::uint64_t c = 0; c < N; ++c) keys[r * N + c] = key_at(r, c);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(M)));
  if (threads == 1) {
    work(0, M);
    return keys;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (M + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t r0 = t * chunk;
    const std::uint64_t r1 = std::min(M, r0 + chunk);
    if (r0 < r1) pool.emplace_back(work, r0, r1);
  }
  for (auto& th : pool) th.join();
  return keys;
}

template <typename Key>
void dedup(const CyclicMap& map, std::size_t m, std::size_t n, const std::vector<Key>& keys,
           VerificationReport& rep) {
  const std::uint64_t N = map.width();
  std::unordered_map<Key, std::uint64_t> first;
  first.reserve(keys.size());
  for (std::uint64_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = first.try_emplace(keys[i], i);
    if (inserted) continue;
    ++rep.duplicate_count;
    if (rep.duplicate_witnesses.size() < kWitnessCap) {
      rep.duplicate_witnesses.push_back({map.window(i / N, i % N, m, n),
                                         Position{it->second / N, it->second % N},
                                         Position{i / N, i % N}});
    }
  }
  rep.distinct_windows = first.size();
}

}  // namespace detail

inline VerificationReport verify(const CyclicMap& map, std::size_t m, std::size_t n,
                                 const VerifyOptions& opts = {}) {
  if (m == 0 || n == 0) throw ArgumentError("window shape must be >= 1");
  const std::uint64_t M = map.height();
  const std::uint64_t N = map.width();
  if (M > opts.budget / N) {
    throw ResourceError("verify: " + std::to_string(M) + "x" + std::to_string(N) +
                        " windows exceed budget " + std::to_string(opts.budget));
  }
  VerificationReport rep;
  rep.M = M;
  rep.N = N;
  rep.m = m;
  rep.n = n;
  rep.k = map.k();
  if (fits_u64_code(map.k(), m * n)) {
    auto keys = detail::window_keys<std::uint64_t>(map, opts.threads, [&](auto r, auto c) {
      return detail::window_key_u64(map, r, c, m, n);
    });
    detail::dedup(map, m, n, keys, rep);
  } else {
    auto keys = detail::window_keys<std::string>(map, opts.threads, [&](auto r, auto c) {
      return detail::window_key_bytes(map, r, c, m, n);
    });
    detail::dedup(map, m, n, keys, rep);
  }
  const BigInt total = pow_big(map.k(), std::uint64_t(m) * n);
  rep.coverage_ratio = {BigInt(rep.distinct_windows), total};
  rep.is_sub_perfect = rep.duplicate_count == 0;
  rep.is_perfect = rep.is_sub_perfect && BigInt(M) * N == total;
  rep.is_de_bruijn_ring = rep.is_sub_perfect && M == m && map.k() >= 1 &&
                          BigInt(N) == necklace_poly(pow_big(map.k(), n), m);
  return rep;
}

inline Rational coverage(const CyclicMap& map, std::size_t m, std::size_t n,
                         const VerifyOptions& opts = {}) {
  return verify(map, m, n, opts).coverage_ratio.reduced();
}

namespace detail {

inline std::string render_any(const Pattern& p) {
  if (p.k() <= kSymbolRamp.size()) return render_cells(p);
  std::string s;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (c) s += ',';
      s += std::to_string(p.at(r, c));
    }
  }
  return s;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["M"] = rep.M;
  j["N"] = rep.N;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["distinct_windows"] = rep.distinct_windows;
  j["duplicate_count"] = rep.duplicate_count;
  auto wit = nlohmann::ordered_json::array();
  for (const auto& w : rep.duplicate_witnesses) {
    wit.push_back({{"pattern", detail::render_any(w.pattern)},
                   {"first", {w.first.row, w.first.col}},
                   {"second", {w.second.row, w.second.col}}});
  }
  j["duplicate_witnesses"] = wit;
  const Rational reduced = rep.coverage_ratio.reduced();
  j["coverage_ratio"] = {{"numerator", rep.coverage_ratio.numerator.str()},
                         {"denominator", rep.coverage_ratio.denominator.str()},
                         {"reduced", numerator(reduced).str() + "/" + denominator(reduced).str()}};
  j["is_sub_perfect"] = rep.is_sub_perfect;
  j["is_perfect"] = rep.is_perfect;
  j["is_de_bruijn_ring"] = rep.is_de_bruijn_ring;
  return j;
}

inline void write_report(std::ostream& out, const VerificationReport& rep) {
  out << "map " << rep.M << "x" << rep.N << ", window " << rep.m << "x" << rep.n
      << ", k=" << rep.k << '\n';
  out << "distinct windows: " << rep.distinct_windows << " of " << rep.M * rep.N << '\n';
  out << "coverage: " << rep.coverage_ratio.str() << '\n';
  out << "sub-perfect: " << (rep.is_sub_perfect ? "yes" : "no") << '\n';
  out << "perfect: " << (rep.is_perfect ? "yes" : "no") << '\n';
  out << "de Bruijn ring: " << (rep.is_de_bruijn_ring ? "yes" : "no") << '\n';
  if (rep.duplicate_count) {
    out << "duplicates: " << rep.duplicate_count << '\n';
    for (const auto& w : rep.duplicate_witnesses) {
      out << "  " << detail::render_any(w.pattern) << " at (" << w.first.row << ","
          << w.first.col << ") and (" << w.second.row << "," << w.second.col << ")\n";
    }
  }
}

}  // namespace dbring
