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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "ekr/permutation.hpp"

namespace ekr {

/// Raised when an operation would need more elements than its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an element is expected to lie in a group but does not.
class NotAMember : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Resource caps shared by the enumeration-based algorithms.
struct Caps {
  std::uint64_t enumeration = 2'000'000;    ///< full element enumeration
  std::uint64_t class_orbit = 50'000'000;   ///< conjugation-orbit closure
};

/// One level of a stabilizer chain: G^(l) fixes base[0..l-1] pointwise.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;          ///< strong generators lying in G^(l)
  std::vector<Point> orbit;                     ///< basic orbit; orbit[0] == base
  std::vector<std::int32_t> position;           ///< point -> index in orbit, or -1
  std::vector<Permutation> transversal;         ///< transversal[k](base) == orbit[k]
  std::vector<Permutation> inverse_transversal;
};

/// A permutation group with a complete stabilizer chain.
///
/// Immutable once built. Elements are ranked by their transversal digits with
/// level 0 most significant, so rank 0 is the identity and enumeration order
/// is deterministic.
class PermutationGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<ChainLevel>& chain() const noexcept { return chain_; }
  std::vector<Point> base() const;

  bool contains(const Permutation& g) const;
  /// Rank in [0, order) or nullopt when g is not in the group. `scratch` needs 2*degree points.
  std::optional<std::uint64_t> rank(std::span<const Point> g, std::span<Point> scratch) const;
  std::optional<std::uint64_t> rank(std::span<const Point> g) const;
  /// Throws NotAMember.
  std::uint64_t rank_of(const Permutation& g) const;
  Permutation unrank(std::uint64_t r) const;
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  friend PermutationGroup build_group(const std::vector<Permutation>&, std::span<const Point>);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> chain_;
  std::vector<std::size_t> active_;      ///< levels with a non-trivial basic orbit
  std::vector<std::uint64_t> stride_;    ///< mixed-radix stride per active level
  std::uint64_t order_ = 1;
};

/// Deterministic Schreier-Sims. The base is `base_prefix` followed by the
/// remaining points in increasing order.
PermutationGroup build_group(const std::vector<Permutation>& generators,
                             std::span<const Point> base_prefix = {});

/// All elements in rank order, stored contiguously.
class ElementTable {
 public:
  ElementTable(const PermutationGroup& group, std::uint64_t cap = Caps{}.enumeration);

  const PermutationGroup& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t size() const noexcept { return size_; }
  std::span<const Point> operator[](std::uint64_t r) const {
    return {data_.data() + r * degree_, degree_};
  }
  Permutation element(std::uint64_t r) const;
  /// Rank of an arbitrary permutation, throwing NotAMember if it lies outside the group.
  std::uint64_t rank(std::span<const Point> g) const;

 private:
  PermutationGroup group_;
  std::size_t degree_;
  std::uint64_t size_;
  std::vector<Point> data_;
};

/// Equivalent to ElementTable(group, cap); throws CapExceeded when |G| > cap.
ElementTable enumerate_elements(const PermutationGroup& group, std::uint64_t cap = Caps{}.enumeration);

/// Calls `visit` on every element in rank order without storing them.
void for_each_element(const PermutationGroup& group,
                      const std::function<void(std::uint64_t, std::span<const Point>)>& visit);

std::vector<std::vector<Point>> orbits(const PermutationGroup& group);
bool is_transitive(const PermutationGroup& group);

/// Largest k such that the group is k-transitive on [n].
std::size_t transitivity_degree(const PermutationGroup& group);

PermutationGroup point_stabilizer(const PermutationGroup& group, Point x);

/// Elements of the group that map the point `from` to `to`, in rank order.
std::vector<Permutation> coset_mapping(const PermutationGroup& group, Point from, Point to);

}  // namespace ekr
