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
#include <vector>

#include "ekr/group.hpp"

namespace ekr {

struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size = 0;
  std::uint64_t element_order = 1;
  std::size_t fixed_points = 0;
  std::vector<std::size_t> cycle_type;
};

/// Conjugacy classes of an enumerated group with an element -> class lookup.
///
/// Classes are numbered in order of their least-ranked element, so class 0 is
/// the identity class.
class ConjugacyClassTable {
 public:
  ConjugacyClassTable(const ElementTable& elements);

  std::size_t size() const noexcept { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::uint64_t group_order() const noexcept { return group_order_; }

  std::size_t class_of_rank(std::uint64_t rank) const { return class_of_[rank]; }
  /// Throws NotAMember.
  std::size_t index_of(const Permutation& g) const;
  std::size_t inverse_class(std::size_t i) const { return inverse_[i]; }
  /// Class of rep_i^s for 0 <= s < element_order(i).
  std::size_t power_class(std::size_t i, std::uint64_t s) const {
    return power_[i][s % classes_[i].element_order];
  }
  /// Ranks of the elements of class i, ascending.
  const std::vector<std::uint32_t>& members(std::size_t i) const { return members_[i]; }
  /// lcm of the element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }

 private:
  PermutationGroup group_;
  std::uint64_t group_order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> power_;
  std::uint64_t exponent_ = 1;
};

ConjugacyClassTable conjugacy_classes(const ElementTable& elements);

/// Visits every element of the conjugacy class of `rep` once, closing under
/// conjugation by the generators. Returns the class size; throws CapExceeded
/// when the class is larger than `cap`.
std::uint64_t conjugation_orbit(const PermutationGroup& group, const Permutation& rep,
                                const std::function<void(std::span<const Point>)>& visit,
                                std::uint64_t cap = Caps{}.class_orbit);

std::vector<Permutation> conjugation_orbit(const PermutationGroup& group, const Permutation& rep,
                                           std::uint64_t cap = Caps{}.class_orbit);

/// Elements of G commuting with g, by enumeration.
std::uint64_t centralizer_order(const ElementTable& elements, const Permutation& g);

}  // namespace ekr
