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
#include <optional>
#include <random>
#include <vector>

#include "ekr/character_table.hpp"
#include "ekr/clique_search.hpp"
#include "ekr/exact_rank.hpp"
#include "ekr/pairs_graph.hpp"

namespace ekr {

/// Column index of the off-diagonal pair (i, j), i != j, both below n-1.
inline std::size_t offdiag_column(std::size_t n, std::size_t i, std::size_t j) {
  return i * (n - 2) + (j < i ? j : j - 1);
}

/// The incidence vectors v_{i,j} (pi -> [pi(i) == j]) arranged as matrices.
///
/// Columns of H-bar: the n diagonal pairs (i,i), then the off-diagonal pairs
/// (i,j) of points below n-1 in lexicographic order; the last point n-1 is the
/// distinguished one. Rows: identity, derangements, then the remaining
/// elements, each in rank order.
struct ModuleMatrices {
  std::size_t n = 0;
  std::size_t derangements = 0;
  std::vector<std::uint32_t> row_ranks;
  BinaryMatrix h_bar;

  /// Rows 1..d restricted to the off-diagonal columns.
  BinaryMatrix m() const;
  /// Non-identity non-derangement rows restricted to the diagonal columns.
  BinaryMatrix b() const;
};

ModuleMatrices module_matrices(const DerangementIndex& der);

/// All n^2 columns (i, j) in lexicographic order, rows in rank order.
BinaryMatrix matrix_h(const ElementTable& elements);

/// Derangement rows by off-diagonal pair columns.
BinaryMatrix build_m(const DerangementIndex& der);

/// Rows of a single conjugacy class, streamed from a representative.
BinaryMatrix build_m_class(const PermutationGroup& group, const Permutation& rep, std::uint64_t cap = Caps{}.class_orbit);

struct GramCheck {
  std::size_t dim = 0;
  std::vector<std::int64_t> gram;  ///< dim x dim, row-major
  std::int64_t diagonal = 0;       ///< expected |G|/n
  std::int64_t off = 0;            ///< expected |G|/(n(n-1))
  bool matches = false;
  bool positive_definite = false;
};

/// Gram matrix of {v_{i,j} : i, j < n-1} compared with
/// (|G|/n) I + |G|/(n(n-1)) (A(K_{n-1}) x A(K_{n-1})).
GramCheck gram_l(const ElementTable& elements);

struct ClassGram {
  std::size_t n = 0;
  std::uint64_t class_size = 0;
  std::vector<std::int64_t> gram;  ///< over the (n-1)(n-2) off-diagonal pairs
  std::int64_t lambda = 0;         ///< common diagonal entry
  std::int64_t mu = 0;             ///< common entry on pairs-graph edges
  bool pattern_fit = false;        ///< N == lambda I + mu A(X_n)
  bool swap_entry_zero = false;    ///< N at ((0,1),(1,0)) is 0
  bool pairs_bound = false;        ///< least eigenvalue of X_n >= -(n-3), checked exactly
  bool positive_definite = false;  ///< pattern_fit, mu >= 0 and lambda - mu(n-3) > 0
  std::int64_t least_bound() const { return lambda - mu * (static_cast<std::int64_t>(n) - 3); }
};

/// N = M_C^T M_C for the class of `rep`, with pattern analysis. The pairs-graph
/// check is skipped when `pairs` is null.
ClassGram class_gram(const PermutationGroup& group, const Permutation& rep, const PairsSpectrumCheck* pairs = nullptr,
                     std::uint64_t cap = Caps{}.class_orbit);

/// A random element with the given sorted cycle type, or nullopt after `tries`.
std::optional<Permutation> element_with_cycle_type(const PermutationGroup& group, const std::vector<std::size_t>& type,
                                                   std::mt19937_64& rng, std::size_t tries = 100000);

/// An element of the stabilizer of x fixing no other point.
std::optional<Permutation> unique_fixed_point_element(const PermutationGroup& group, Point x);

/// Exact check that E_std (v_{i,j} - 1/n) = v_{i,j} - 1/n and E_triv v_{i,j} = 1/n.
/// Throws CapExceeded for groups larger than `cap`.
bool standard_projection_check(const ElementTable& elements, const ConjugacyClassTable& classes,
                               const CharacterTable& table, Point i, Point j, std::uint64_t cap = 2000);

struct IdentityBlock {
  std::vector<Permutation> rows;  ///< one element per point x, fixing only x
  bool identity = false;
};

/// Selects one B row per point through unique_fixed_point_element and checks
/// the diagonal columns form an identity matrix.
IdentityBlock b_identity_submatrix(const PermutationGroup& group);

}  // namespace ekr
