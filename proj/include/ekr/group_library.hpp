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
#include <stdexcept>
#include <string>
#include <vector>

#include "ekr/finite_field.hpp"
#include "ekr/group.hpp"

namespace ekr {

/// Raised for unknown keys, unsupported constructions, or catalog data that
/// fails validation.
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::uint64_t expected_order = 0;
  std::vector<std::string> generators;  ///< 1-indexed cycle notation
  std::string provenance;               ///< "constructed" or "catalog"
  std::string notes;

  std::vector<Permutation> permutations() const;
};

/// Builds the group and checks degree, order and 2-transitivity; throws CatalogError.
PermutationGroup build(const GroupSpec& spec);

/// x -> A * x^(p^frobenius) on column vectors over GF(q); `matrix` is row-major dim x dim.
struct SemilinearMap {
  std::vector<std::uint32_t> matrix;
  std::uint32_t frobenius = 0;
};

enum class ProjectiveFamily { PGL, PSL, PGammaL, PSigmaL };
enum class AffineFamily { AGL, ASL, AGammaL, ASigmaL };

/// Action on the points of PG(dim-1, q), ordered lexicographically by
/// normalized coordinates (first nonzero coordinate equal to 1).
GroupSpec projective_group(ProjectiveFamily family, std::size_t dim, std::uint32_t q);
GroupSpec projective_semilinear(const std::string& name, const FiniteField& field, std::size_t dim,
                                const std::vector<SemilinearMap>& maps, std::uint64_t expected_order);

/// Action on GF(q)^dim; vector (v_1..v_dim) has index sum v_i q^(dim-i).
GroupSpec affine_group(AffineFamily family, std::size_t dim, std::uint32_t q);
/// Translations plus the given matrices over the prime field GF(p).
GroupSpec affine_group(const std::string& name, std::uint32_t p, std::size_t dim,
                       const std::vector<std::vector<std::uint32_t>>& matrices, std::uint64_t expected_order);
GroupSpec affine_semilinear(const std::string& name, const FiniteField& field, std::size_t dim,
                            const std::vector<SemilinearMap>& maps, std::uint64_t expected_order);

/// Generators of SL(dim, q): elementary transvections over an additive basis.
std::vector<SemilinearMap> special_linear_generators(const FiniteField& field, std::size_t dim);

/// Records of the shipped catalog file, validated on first use.
const std::vector<GroupSpec>& shipped_catalog();
std::vector<GroupSpec> parse_catalog(const std::string& text);

/// Resolves a key: named entries (shipped catalog and special constructions)
/// first, then family keys such as "PGL(2,7)" or "AGammaL(1,8)".
GroupSpec catalog_group(const std::string& key);

struct TableRow {
  std::size_t n;
  std::string key;
  std::string structure;  ///< structural description of the group
};

/// The 2-transitive groups of degree 5..20 covered by the reference table,
/// in its row order.
const std::vector<TableRow>& small_groups_table();

/// Keys of the Mathieu family and their point actions.
const std::vector<std::string>& mathieu_keys();

}  // namespace ekr
