// Copyright 2026 The wep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wep/error.hpp"
#include "wep/graph.hpp"

namespace wep {

/// Permutation of {0..n-1}; image()[v] is where v is sent.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int x : image_) {
      if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x])
        detail::fail(ErrorKind::NotPermutation, "image list is not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img), Unchecked{});
  }

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  std::span<const int> image() const { return image_; }

  /// (this * other)(v) = this(other(v)).
  Permutation operator*(const Permutation& other) const {
    detail::require(size() == other.size(), ErrorKind::DimensionMismatch,
                    "composing permutations of different degree");
    std::vector<int> img(image_.size());
    for (int v = 0; v < size(); ++v) img[v] = image_[other.image_[v]];
    return Permutation(std::move(img), Unchecked{});
  }

  Permutation inverse() const {
    std::vector<int> img(image_.size());
    for (int v = 0; v < size(); ++v) img[image_[v]] = v;
    return Permutation(std::move(img), Unchecked{});
  }

  Permutation pow(long k) const {
    Permutation result = identity(size());
    for (long i = 0; i < k; ++i) result = *this * result;
    return result;
  }

  bool is_identity() const {
    for (int v = 0; v < size(); ++v)
      if (image_[v] != v) return false;
    return true;
  }

  /// Smallest k >= 1 with this^k = id, by repeated composition.
  long order() const {
    Permutation p = *this;
    long k = 1;
    while (!p.is_identity()) {
      p = *this * p;
      ++k;
    }
    return k;
  }

  bool is_involution() const {
    for (int v = 0; v < size(); ++v)
      if (image_[image_[v]] != v) return false;
    return true;
  }

  bool is_fixed_point_free() const {
    for (int v = 0; v < size(); ++v)
      if (image_[v] == v) return false;
    return true;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;
};

/// True iff p maps edges to edges and non-edges to non-edges.
inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) != g.degree(p(u))) return false;
    for (int v : g.neighbors(u))
      if (!g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

/// Cycle notation with 1-based points, fixed points omitted, e.g. "(1 4)(2 3)".
/// The identity prints as "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (int s = 0; s < p.size(); ++s) {
    if (seen[s] || p(s) == s) continue;
    out += '(';
    int v = s;
    bool first = true;
    while (!seen[v]) {
      seen[v] = 1;
      if (!first) out += ' ';
      out += std::to_string(v + 1);
      first = false;
      v = p(v);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Parses cycle notation over {1..n}; points not mentioned are fixed.
inline Permutation parse_cycles(std::string_view text, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(n, 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      detail::fail(ErrorKind::MalformedPermutation, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) detail::fail(ErrorKind::MalformedPermutation, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        detail::fail(ErrorKind::MalformedPermutation, "unexpected character in cycle");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > n) break;
        ++i;
      }
      if (v < 1 || v > n)
        detail::fail(ErrorKind::MalformedPermutation, "point outside 1.." + std::to_string(n));
      if (used[v - 1]) detail::fail(ErrorKind::NotPermutation, "point " + std::to_string(v) + " repeated");
      used[v - 1] = 1;
      cycle.push_back(static_cast<int>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(img));
}

}  // namespace wep
