// Copyright 2026 The ekr-verify Authors
//
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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ekr {

/// A point of [n], stored 0-indexed. All text I/O is 1-indexed.
using Point = std::uint16_t;

/// Thrown by parse_cycles; `position` is the 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when two permutations of different degree meet.
class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {0,...,n-1} stored as its image table.
///
/// Composition acts on the left: (p * q)(i) == p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Takes ownership of an image table; throws std::invalid_argument unless it is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Skips the bijection check; for image tables produced by group arithmetic.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  /// Order of the permutation in Sym(n), i.e. lcm of the cycle lengths.
  std::uint64_t order() const;
  /// Sorted cycle lengths including fixed points as 1-cycles.
  std::vector<std::size_t> cycle_type() const;
  /// 1-indexed disjoint cycle notation; the identity prints as "()".
  std::string to_cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Parses products of disjoint cycles such as "(1,2,3)(4,5)" on `degree` points.
/// Whitespace is ignored; "()" or the empty string is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// r(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation invert(const Permutation& p);

/// g * x * g^-1
Permutation conjugate(const Permutation& x, const Permutation& g);

std::vector<Point> fixed_points(const Permutation& p);
std::size_t fixed_point_count(std::span<const Point> images) noexcept;
inline std::size_t fixed_point_count(const Permutation& p) noexcept {
  return fixed_point_count(p.images());
}
inline bool is_derangement(const Permutation& p) noexcept { return fixed_point_count(p) == 0; }

/// Raw-span kernels used by the enumeration-heavy code paths.
namespace raw {
/// out(i) = p(q(i)); out must not alias q.
inline void compose(std::span<const Point> p, std::span<const Point> q, std::span<Point> out) noexcept {
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
}
inline void invert(std::span<const Point> p, std::span<Point> out) noexcept {
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<Point>(i);
}
}  // namespace raw

}  // namespace ekr
