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
#include <set>

#include "ekr/group.hpp"
#include "ekr/group_library.hpp"

using namespace ekr;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

PermutationGroup symmetric(std::size_t n) {
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  return build_group({Permutation(cycle), parse_cycles("(1,2)", n)});
}

// Closure under right multiplication by generators; independent of the chain.
std::set<Permutation> naive_closure(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens)
        if (auto y = x * g; seen.insert(y).second) next.push_back(y);
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("symmetric group orders") {
  for (std::size_t n = 2; n <= 9; ++n) CHECK(symmetric(n).order() == factorial(n));
}

TEST_CASE("rank and unrank are inverse bijections") {
  const PermutationGroup g = build(catalog_group("PGL(2,5)"));
  std::set<Permutation> seen;
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    const Permutation x = g.unrank(r);
    CHECK(g.rank_of(x) == r);
    seen.insert(x);
  }
  CHECK(seen.size() == g.order());
  CHECK(g.unrank(0).is_identity());
}

TEST_CASE("chain order agrees with naive closure") {
  for (const char* key : {"AGL(1,7)", "PSL(2,7)", "AGammaL(1,8)", "Alt(6)"}) {
    const PermutationGroup g = build(catalog_group(key));
    const auto closure = naive_closure(g.generators());
    CHECK(closure.size() == g.order());
    for (const auto& x : closure) CHECK(g.contains(x));
  }
}

TEST_CASE("membership rejects outsiders") {
  const PermutationGroup alt = build_group({parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)});
  CHECK(alt.order() == 60);
  CHECK(alt.contains(parse_cycles("(1,2,3)", 5)));
  CHECK_FALSE(alt.contains(parse_cycles("(1,2)", 5)));
  CHECK_THROWS_AS(alt.rank_of(parse_cycles("(1,2)", 5)), NotAMember);
}

TEST_CASE("transitivity degrees") {
  CHECK(transitivity_degree(symmetric(5)) == 5);
  CHECK(transitivity_degree(build_group({parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)})) == 3);
  CHECK(transitivity_degree(build(catalog_group("Alt(5)"))) == 2);  // PSL(2,5) on the projective line
  CHECK(transitivity_degree(build(catalog_group("PGL(2,5)"))) == 3);
  CHECK(transitivity_degree(build(catalog_group("M11"))) == 4);
  CHECK(transitivity_degree(build(catalog_group("M12"))) == 5);
  CHECK(transitivity_degree(build(catalog_group("AGL(1,5)"))) == 2);
  const PermutationGroup cyclic = build_group({parse_cycles("(1,2,3,4,5)", 5)});
  CHECK(is_transitive(cyclic));
  CHECK(transitivity_degree(cyclic) == 1);
  CHECK(orbits(build_group({parse_cycles("(1,2)(3,4,5)", 6)})).size() == 3);
}

TEST_CASE("stabilizer orders follow the orbit-stabilizer theorem") {
  const PermutationGroup m11 = build(catalog_group("M11"));
  CHECK(point_stabilizer(m11, 0).order() == 720);
  CHECK(point_stabilizer(m11, 7).order() == 720);
  const auto coset = coset_mapping(m11, 0, 3);
  CHECK(coset.size() == 720);
  for (const auto& x : coset) CHECK(x(0) == 3);
}

TEST_CASE("element tables enumerate in rank order") {
  const PermutationGroup g = build(catalog_group("AGL(1,7)"));
  const ElementTable table(g);
  CHECK(table.size() == 42);
  for (std::uint64_t r = 0; r < table.size(); ++r) {
    CHECK(table.element(r) == g.unrank(r));
    CHECK(table.rank(table[r]) == r);
  }
  CHECK_THROWS_AS(enumerate_elements(g, 10), CapExceeded);
  std::uint64_t visited = 0;
  for_each_element(g, [&](std::uint64_t r, std::span<const Point> x) {
    CHECK(std::equal(x.begin(), x.end(), table[r].begin()));
    ++visited;
  });
  CHECK(visited == 42);
}

TEST_CASE("random elements are members") {
  const PermutationGroup g = build(catalog_group("M12"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) CHECK(g.contains(g.random_element(rng)));
}
