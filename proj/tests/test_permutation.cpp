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

#include <random>

#include "ekr/permutation.hpp"

using namespace ekr;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  const Permutation p = parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  CHECK(p(3) == 4);
  CHECK(p(5) == 5);
  CHECK(p.to_cycles() == "(1,2,3)(4,5)");
  CHECK(parse_cycles(" ( 1 , 2 ) ", 3).to_cycles() == "(1,2)");
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles("", 4).is_identity());
  CHECK(Permutation::identity(3).to_cycles() == "()");
}

TEST_CASE("malformed cycles report their offset") {
  CHECK_THROWS_AS(parse_cycles("(1,2,1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1,2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)", 3), ParseError);
  try {
    parse_cycles("(1,2)(3,x)", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("composition applies the right factor first") {
  const Permutation p = parse_cycles("(1,2)", 3);
  const Permutation q = parse_cycles("(2,3)", 3);
  // (pq)(3) = p(q(3)) = p(2) = 1
  const Permutation pq = p * q;
  CHECK(pq(2) == 0);
  CHECK(pq.to_cycles() == "(1,2,3)");
  CHECK((q * p).to_cycles() == "(1,3,2)");
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("orders and cycle types") {
  const Permutation p = parse_cycles("(1,2,3)(4,5)", 7);
  CHECK(p.order() == 6);
  CHECK(p.cycle_type() == std::vector<std::size_t>{1, 1, 2, 3});
  CHECK(fixed_points(p) == std::vector<Point>{5, 6});
  CHECK(fixed_point_count(p) == 2);
  CHECK_FALSE(is_derangement(p));
  CHECK(is_derangement(parse_cycles("(1,2)(3,4,5)", 5)));
}

TEST_CASE("conjugation relabels cycles") {
  const Permutation x = parse_cycles("(1,2,3)", 5);
  const Permutation g = parse_cycles("(1,4)(2,5)", 5);
  CHECK(conjugate(x, g).to_cycles() == "(3,4,5)");
}

TEST_CASE("invalid image tables are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), std::invalid_argument);
}

TEST_CASE("group laws on random permutations") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const Permutation a = random_permutation(n, rng), b = random_permutation(n, rng), c = random_permutation(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((invert(a) * a).is_identity());
    CHECK(invert(a * b) == invert(b) * invert(a));
    CHECK(parse_cycles(a.to_cycles(), n) == a);
    std::uint64_t order = a.order();
    Permutation power = Permutation::identity(n);
    for (std::uint64_t k = 0; k < order; ++k) power = power * a;
    CHECK(power.is_identity());
    CHECK(fixed_point_count(conjugate(a, b)) == fixed_point_count(a));
  }
}
