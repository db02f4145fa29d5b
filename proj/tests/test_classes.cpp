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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "ekr/classes.hpp"
#include "ekr/group_library.hpp"

using namespace ekr;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// |Sym(n)| / z_lambda with z_lambda = prod_k k^{m_k} m_k!.
std::uint64_t symmetric_class_size(const std::vector<std::size_t>& type) {
  std::map<std::size_t, std::uint64_t> mult;
  for (std::size_t k : type) ++mult[k];
  std::uint64_t z = 1;
  for (auto [k, m] : mult) {
    for (std::uint64_t i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  const std::size_t n = std::accumulate(type.begin(), type.end(), std::size_t{0});
  return factorial(n) / z;
}

PermutationGroup symmetric(std::size_t n) {
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  return build_group({Permutation(cycle), parse_cycles("(1,2)", n)});
}

}  // namespace

TEST_CASE("symmetric group classes are cycle types") {
  const ElementTable elements(symmetric(6));
  const ConjugacyClassTable classes(elements);
  CHECK(classes.size() == 11);  // partitions of 6
  CHECK(classes[0].representative.is_identity());
  for (const auto& c : classes.classes()) CHECK(c.size == symmetric_class_size(c.cycle_type));
  CHECK(classes.exponent() == 60);
}

TEST_CASE("class structure of M11") {
  const ElementTable elements(build(catalog_group("M11")));
  const ConjugacyClassTable classes(elements);
  CHECK(classes.size() == 10);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    total += c.size;
    CHECK(c.size * centralizer_order(elements, c.representative) == elements.size());
    CHECK(c.element_order == c.representative.order());
    CHECK(classes.members(i).size() == c.size);
    CHECK(classes.index_of(c.representative) == i);
    // Inverse and power maps agree with direct lookup.
    CHECK(classes.inverse_class(i) == classes.index_of(invert(c.representative)));
    Permutation power = Permutation::identity(11);
    for (std::uint64_t s = 0; s < c.element_order; ++s) {
      CHECK(classes.power_class(i, s) == classes.index_of(power));
      power = power * c.representative;
    }
  }
  CHECK(total == 7920);
  // Classes are numbered by least rank.
  for (std::size_t i = 1; i < classes.size(); ++i) CHECK(classes.members(i - 1).front() < classes.members(i).front());
}

TEST_CASE("conjugation orbits match the class table") {
  const PermutationGroup g = build(catalog_group("PGL(2,7)"));
  const ElementTable elements(g);
  const ConjugacyClassTable classes(elements);
  for (const auto& c : classes.classes()) {
    const auto orbit = conjugation_orbit(g, c.representative);
    CHECK(orbit.size() == c.size);
    for (const auto& x : orbit) CHECK(x.cycle_type() == c.cycle_type);
  }
  const auto& big = *std::max_element(classes.classes().begin(), classes.classes().end(),
                                      [](const auto& a, const auto& b) { return a.size < b.size; });
  CHECK_THROWS_AS(conjugation_orbit(g, big.representative, big.size - 1), CapExceeded);
}

TEST_CASE("class lookup rejects non-members") {
  const ElementTable elements(build(catalog_group("Alt(5)")));
  const ConjugacyClassTable classes(elements);
  CHECK_THROWS_AS(classes.index_of(parse_cycles("(1,2)", 6)), NotAMember);
}
