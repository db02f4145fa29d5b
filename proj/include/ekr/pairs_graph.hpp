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
#include <utility>
#include <vector>

#include "ekr/permutation.hpp"

namespace ekr {

/// Graph on the ordered pairs (i, j), i != j, of points 0..n-2, listed
/// lexicographically (the off-diagonal column order of the module matrices).
///
/// (i,j) ~ (k,l) iff the pairs are disjoint, or i == l and j != k, or
/// i != l and j == k.
class PairsGraph {
 public:
  explicit PairsGraph(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::pair<Point, Point>>& vertices() const noexcept { return vertices_; }
  /// Index of (i, j); both below n-1 and distinct.
  std::size_t index(std::size_t i, std::size_t j) const { return i * (n_ - 2) + (j < i ? j : j - 1); }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_[a * size() + b] != 0; }
  /// Valency of vertex 0; meaningful when regular() holds.
  std::size_t valency() const noexcept { return valency_; }
  bool regular() const noexcept { return regular_; }

 private:
  std::size_t n_;
  std::vector<std::pair<Point, Point>> vertices_;
  std::vector<std::uint8_t> adjacency_;
  std::size_t valency_ = 0;
  bool regular_ = true;
};

struct PairsSpectrumCheck {
  /// Candidate eigenvalues (n-2)(n-3), 2, 0, -(n-3), distinct, descending.
  std::vector<std::int64_t> candidates;
  bool annihilated = false;     ///< prod (A - theta I) == 0 exactly
  std::int64_t least = 0;       ///< least candidate that is an eigenvalue
  bool least_bound_holds = false;  ///< least >= -(n-3)
};

/// Exact check that the spectrum lies in the candidate set: A is symmetric, so
/// a polynomial with simple roots annihilating A contains every eigenvalue.
PairsSpectrumCheck least_eigenvalue_check(const PairsGraph& graph);

}  // namespace ekr
