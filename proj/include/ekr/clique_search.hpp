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
#include <string>
#include <vector>

#include "ekr/character_table.hpp"
#include "ekr/derangement_graph.hpp"

namespace ekr {

/// Per-element derangement flags over the enumerated group, indexed by rank.
struct DerangementIndex {
  const ElementTable* elements = nullptr;
  const ConjugacyClassTable* classes = nullptr;
  std::vector<std::uint32_t> ranks;  ///< derangements in rank order

  DerangementIndex(const ElementTable& elements, const ConjugacyClassTable& classes);
  bool is_derangement(std::uint64_t rank) const;
};

/// A clique of the derangement graph; the identity comes first.
struct Clique {
  std::vector<Permutation> elements;
  std::size_t size() const noexcept { return elements.size(); }
};

struct CliqueBudget {
  std::uint64_t nodes = 10'000'000;  ///< candidate tests per attempt
  std::size_t attempts = 50;         ///< clique attempts per character
  std::uint64_t seed = 1;
};

/// True iff every pairwise quotient is a derangement. Throws NotAMember for
/// elements outside the group.
bool verify_clique(const PermutationGroup& group, const std::vector<Permutation>& elements);

/// Translates so the identity comes first: C -> C * c_0^-1.
Clique canonical_clique(std::vector<Permutation> elements);

/// Regular subgroups visible without search: cyclic groups generated by an
/// n-cycle, and derangement classes of size n-1 closed under multiplication.
std::vector<Clique> shortcut_cliques(const DerangementIndex& der);

/// Sharply transitive set by backtracking over images of the first point.
/// `attempt` 0 keeps the natural candidate order; later attempts shuffle it.
std::optional<Clique> search_n_clique(const DerangementIndex& der, const CliqueBudget& budget,
                                      std::size_t attempt = 0);

/// Shortcuts first, then one search attempt.
std::optional<Clique> find_n_clique(const DerangementIndex& der, const CliqueBudget& budget = {});

/// v_C^T E_chi v_C = (chi(1)/|G|) * sum over pi, sigma in C of chi(pi^-1 sigma).
struct ProjectionNorm {
  Cyclotomic numerator;  ///< chi(1) * sum
  std::uint64_t denominator = 1;
  long double value = 0;
  bool zero = true;
};

/// Class index of pi^-1 sigma for all ordered pairs, tallied.
std::vector<std::uint64_t> quotient_class_counts(const ConjugacyClassTable& classes, const Clique& clique);

ProjectionNorm projection_norm(const CharacterTable& table, std::size_t chi,
                               const std::vector<std::uint64_t>& quotient_counts);

/// chi(C) = sum over x in C of chi(x).
Cyclotomic character_sum(const CharacterTable& table, const ConjugacyClassTable& classes, std::size_t chi,
                         const Clique& clique);

struct ModuleWitness {
  std::size_t character = 0;
  std::optional<std::size_t> clique;  ///< index into ModuleByClique::cliques
};

struct ModuleByClique {
  std::vector<Clique> cliques;
  std::vector<ModuleWitness> witnesses;  ///< one per non-trivial, non-standard character
  bool complete() const;
};

/// For every character other than the trivial and standard ones, looks for an
/// n-clique whose characteristic vector has a nonzero projection.
ModuleByClique module_by_clique(const DerangementIndex& der, const CharacterTable& table,
                                const CliqueBudget& budget = {});

}  // namespace ekr
