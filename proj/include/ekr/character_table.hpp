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

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ekr/classes.hpp"
#include "ekr/cyclotomic.hpp"

namespace ekr {

/// The per-class data a character table needs, shared by computed and imported tables.
struct ClassSummary {
  std::uint64_t group_order = 0;
  std::size_t degree = 0;  ///< permutation degree n
  std::uint32_t exponent = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> fixed_points;
  std::vector<bool> derangement;
  std::vector<std::size_t> inverse;

  std::size_t size() const noexcept { return sizes.size(); }
};

ClassSummary summarize(const ConjugacyClassTable& classes, std::size_t degree);

/// Structure constants of the class algebra. matrices[i] is k x k row-major with
/// entry (j, l) = #{x in C_i : x^-1 rep_l in C_j}.
struct ClassConstants {
  std::size_t k = 0;
  std::vector<std::vector<std::uint64_t>> matrices;

  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t l) const { return matrices[i][j * k + l]; }
};

std::vector<std::uint64_t> class_constant_matrix(const ElementTable& elements, const ConjugacyClassTable& classes,
                                                 std::size_t i);
ClassConstants class_constants(const ElementTable& elements, const ConjugacyClassTable& classes);

struct Character {
  std::uint64_t degree = 0;
  std::vector<Cyclotomic> values;
  std::vector<std::complex<long double>> shadow;
};

/// Raised when a table fails an exact consistency check.
class TableInconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact irreducible character table.
///
/// Rows are sorted by degree, then by their float shadows; class columns follow
/// the ClassSummary order. Construction verifies row and column orthogonality
/// exactly and locates the trivial and standard characters.
class CharacterTable {
 public:
  CharacterTable(ClassSummary classes, std::vector<std::vector<Cyclotomic>> values, std::uint64_t prime = 0);

  const ClassSummary& classes() const noexcept { return classes_; }
  const std::vector<Character>& characters() const noexcept { return characters_; }
  const Character& operator[](std::size_t i) const { return characters_[i]; }
  std::size_t size() const noexcept { return characters_.size(); }
  const CyclotomicField& field() const noexcept { return *field_; }
  std::size_t trivial_index() const noexcept { return trivial_; }
  std::size_t standard_index() const noexcept { return standard_; }
  /// Prime used by the modular computation, 0 for imported tables.
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  ClassSummary classes_;
  std::vector<Character> characters_;
  std::shared_ptr<const CyclotomicField> field_;
  std::size_t trivial_ = 0;
  std::size_t standard_ = 0;
  std::uint64_t prime_ = 0;
};

/// Dixon's method over the field with p elements. With prime == 0 the least
/// suitable prime is chosen.
CharacterTable character_table(const ElementTable& elements, const ConjugacyClassTable& classes,
                               std::uint64_t prime = 0);

/// |G| * <a, b> as an element of Z[zeta_e].
Cyclotomic scaled_inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& a,
                                const std::vector<Cyclotomic>& b);

/// <a, b> when it is a rational integer, which holds for any two class functions
/// that are integer combinations of irreducible characters.
std::optional<std::int64_t> inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& a,
                                          const std::vector<Cyclotomic>& b);

/// The class function g -> fix(g), and g -> fix(g) - 1.
std::vector<Cyclotomic> permutation_character(const ClassSummary& classes);
std::vector<Cyclotomic> standard_class_function(const ClassSummary& classes);

}  // namespace ekr
