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

// One-dimensional word machinery: rotations, Lyndon and aperiodicity tests,
// necklace counting and Euler-cycle de Bruijn sequences.
//
// The rotation helpers are templates over any totally ordered letter type so
// the same code serves plain words and the row-words of 2D patterns (where
// each row is one letter of the alphabet Sigma^n).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dbring/errors.hpp"
#include "dbring/numeric.hpp"

namespace dbring {

using Symbol = std::uint8_t;

inline constexpr unsigned kMaxAlphabet = 256;

struct Alphabet {
  unsigned size = 2;

  explicit Alphabet(unsigned k) : size(k) {
    if (k < 1 || k > kMaxAlphabet) {
      throw ArgumentError("alphabet size must be in 1.." + std::to_string(kMaxAlphabet));
    }
  }
  bool contains(unsigned symbol) const { return symbol < size; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

struct Word {
  Alphabet alphabet;
  std::vector<Symbol> letters;

  Word(Alphabet a, std::vector<Symbol> l) : alphabet(a), letters(std::move(l)) {
    if (letters.empty()) throw ArgumentError("word must be nonempty");
    for (Symbol s : letters) {
      if (!alphabet.contains(s)) throw ArgumentError("letter outside alphabet");
    }
  }
  std::size_t size() const { return letters.size(); }
  std::span<const Symbol> view() const { return letters; }
  friend bool operator==(const Word&, const Word&) = default;
};

// Compares rotation `a` against rotation `b` of the cyclic word `w`.
template <typename T>
std::strong_ordering compare_rotations(std::span<const T> w, std::size_t a,
                                       std::size_t b) {
  const std::size_t m = w.size();
  for (std::size_t i = 0; i < m; ++i) {
    const T& x = w[(a + i) % m];
    const T& y = w[(b + i) % m];
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// Offset s of the lexicographically least rotation w[s..] w[..s); the
// smallest such offset when several rotations tie.
template <typename T>
std::size_t least_rotation_offset(std::span<const T> w) {
  std::size_t best = 0;
  for (std::size_t s = 1; s < w.size(); ++s) {
    if (compare_rotations(w, s, best) == std::strong_ordering::less) best = s;
  }
  return best;
}

template <typename T>
std::vector<T> rotate_word(std::span<const T> w, std::size_t offset) {
  std::vector<T> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(offset + i) % w.size()];
  return out;
}

// Smallest p > 0 with rotate(w, p) == w; equals |w| iff w is aperiodic.
template <typename T>
std::size_t rotation_period(std::span<const T> w) {
  const std::size_t m = w.size();
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p == 0 && compare_rotations(w, p, 0) == std::strong_ordering::equal) return p;
  }
  return m;
}

template <typename T>
bool is_lyndon(std::span<const T> w) {
  for (std::size_t s = 1; s < w.size(); ++s) {
    if (compare_rotations(w, 0, s) != std::strong_ordering::less) return false;
  }
  return !w.empty();
}

template <typename T>
bool is_aperiodic(std::span<const T> w) {
  return rotation_period(w) == w.size();
}

inline Word lexmin_rotation(const Word& w) {
  return Word(w.alphabet, rotate_word(w.view(), least_rotation_offset(w.view())));
}
inline bool is_lyndon(const Word& w) { return is_lyndon(w.view()); }
inline bool is_aperiodic(const Word& w) { return is_aperiodic(w.view()); }

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline int mobius(std::uint64_t n) {
  if (n == 0) throw ArgumentError("mobius is defined for n >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Number of Lyndon words of length m over k letters:
// (1/m) * sum_{d | m} mu(m/d) k^d, in exact arithmetic.
inline BigInt necklace_poly(const BigInt& k, std::uint64_t m) {
  if (k < 1 || m < 1) throw ArgumentError("necklace_poly needs k >= 1 and m >= 1");
  BigInt sum = 0;
  for (std::uint64_t d : divisors(m)) {
    const int mu = mobius(m / d);
    if (mu != 0) sum += mu * pow_big(k, d);
  }
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(sum, BigInt(m), q, r);
  if (r != 0) throw InternalError("necklace sum not divisible by m");
  return q;
}

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

// Counts Lyndon words by visiting all k^m words. Used as an oracle.
inline std::uint64_t count_lyndon_brute(unsigned k, unsigned m,
                                        std::uint64_t limit = kEnumerationLimit) {
  const Alphabet alphabet(k);
  if (m < 1) throw ArgumentError("word length must be >= 1");
  const auto total = pow_u64(k, m);
  if (!total || *total > limit) {
    throw EnumerationTooLarge("k^m exceeds the enumeration limit");
  }
  std::vector<Symbol> w(m, 0);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < *total; ++i) {
    if (is_lyndon(std::span<const Symbol>(w))) ++count;
    for (std::size_t pos = m; pos-- > 0;) {
      if (++w[pos] < alphabet.size) break;
      w[pos] = 0;
    }
  }
  return count;
}

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Cyclic sequence of length k^n containing every length-n word once, read
// off an Euler cycle of the (n-1)-dimensional de Bruijn digraph. Each vertex
// always leaves through its smallest unused label.
inline Word debruijn_sequence(unsigned k, unsigned n, std::uint64_t budget = kDefaultBudget) {
  const Alphabet alphabet(k);
  if (k < 2) throw ArgumentError("de Bruijn sequences need k >= 2");
  if (n < 1) throw ArgumentError("window length must be >= 1");
  const auto length = pow_u64(k, n);
  if (!length || *length > budget) throw ResourceError("k^n exceeds the budget");
  const std::uint64_t vertices = *length / k;

  // Vertex v = last n-1 letters in radix k; edge label a leads to (v*k+a) mod |V|.
  std::vector<unsigned> next_label(vertices, 0);
  std::vector<std::uint64_t> vertex_stack{0};
  std::vector<Symbol> label_stack;
  std::vector<Symbol> circuit;
  circuit.reserve(*length);
  while (!vertex_stack.empty()) {
    const std::uint64_t v = vertex_stack.back();
    if (next_label[v] < k) {
      const unsigned a = next_label[v]++;
      label_stack.push_back(static_cast<Symbol>(a));
      vertex_stack.push_back((v * k + a) % vertices);
    } else {
      vertex_stack.pop_back();
      if (!label_stack.empty()) {
        circuit.push_back(label_stack.back());
        label_stack.pop_back();
      }
    }
  }
  if (circuit.size() != *length) throw InternalError("de Bruijn digraph walk is not Eulerian");
  std::reverse(circuit.begin(), circuit.end());
  return Word(alphabet, std::move(circuit));
}

}  // namespace dbring
