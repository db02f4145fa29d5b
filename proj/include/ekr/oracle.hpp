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
#include <vector>

#include "ekr/clique_search.hpp"
#include "ekr/exact_rank.hpp"

namespace ekr {

struct OracleCaps {
  std::uint64_t alpha = 2000;     ///< brute-force independence number
  std::uint64_t counting = 200;   ///< counting maximum independent sets
  std::uint64_t spectrum = 2000;  ///< dense eigendecomposition
};

struct AlphaResult {
  std::uint64_t alpha = 0;
  std::vector<std::uint32_t> witness;  ///< ranks of one maximum independent set
  std::optional<BigInt> count;         ///< number of maximum independent sets, when counted
  std::uint64_t components = 0;        ///< connected components of the derangement graph
  std::uint64_t nodes = 0;             ///< branch-and-bound nodes
};

/// Exact independence number of the derangement graph by branch and bound.
/// The identity is fixed in the set (vertex transitivity) and the second
/// element ranges over conjugacy class representatives (conjugation fixes the
/// identity). Counting covers every maximum independent set and is done when
/// |G| <= caps.counting. Throws CapExceeded above caps.alpha.
AlphaResult brute_alpha(const DerangementIndex& der, const OracleCaps& caps = {});

struct BruteSpectrum {
  std::vector<std::pair<std::int64_t, std::uint64_t>> entries;  ///< eigenvalue, multiplicity; descending
  long double max_deviation = 0;  ///< largest distance of a computed eigenvalue to its integer
  bool integral = false;          ///< every eigenvalue within tolerance of an integer
  bool fallback = false;          ///< the symmetric solver failed to converge
};

/// Dense symmetric eigendecomposition of the adjacency matrix. Throws
/// CapExceeded above caps.spectrum.
BruteSpectrum brute_spectrum(const DerangementIndex& der, const OracleCaps& caps = {}, long double tolerance = 1e-6L);

}  // namespace ekr
