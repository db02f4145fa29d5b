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

#include "ekr/derangement_graph.hpp"
#include "helpers.hpp"

using namespace ekr;
using ekr::testing::load;

namespace {

std::vector<std::pair<std::int64_t, std::uint64_t>> pairs(const DerangementSpectrum& s) {
  std::vector<std::pair<std::int64_t, std::uint64_t>> out;
  for (const auto& e : s.entries) out.emplace_back(e.eigenvalue, e.multiplicity);
  return out;
}

using Spectrum = std::vector<std::pair<std::int64_t, std::uint64_t>>;

}  // namespace

// Spectra below are worked out by hand from the character values.
TEST_CASE("small spectra") {
  CHECK(pairs(load("Sym(3)")->spectrum()) == Spectrum{{2, 2}, {-1, 4}});
  CHECK(pairs(load("Sym(4)")->spectrum()) == Spectrum{{9, 1}, {3, 4}, {1, 9}, {-3, 10}});
  CHECK(pairs(load("Alt(4)")->spectrum()) == Spectrum{{3, 3}, {-1, 9}});
  CHECK(pairs(load("F20")->spectrum()) == Spectrum{{4, 4}, {-1, 16}});
}

TEST_CASE("least eigenvalue analysis") {
  const auto sym4 = load("Sym(4)");
  const auto s = sym4->spectrum();
  CHECK(s.tau == -3);
  CHECK(s.is_standard_least);
  CHECK_FALSE(s.is_standard_unique);  // the sign character also gives -3
  const auto m11 = load("M11");
  const auto t = m11->spectrum();
  CHECK(t.is_standard_least);
  CHECK(t.is_standard_unique);
  const auto agl = load("AGammaL(1,8)");
  CHECK_FALSE(agl->spectrum().is_standard_least);
}

TEST_CASE("spectral identities") {
  for (const char* key : {"Sym(4)", "PGL(2,5)", "AGL(1,7)", "PSL(2,8)", "M10", "M11", "3^2:Q8"}) {
    CAPTURE(key);
    const auto g = load(key);
    const auto der = derangement_classes(g->table.classes());
    const auto s = g->spectrum();
    CHECK(trace_identities(s, g->group.order(), der.d).ok());
    const auto n = static_cast<std::int64_t>(g->n());
    const std::int64_t eta_std = s.eta[g->table.standard_index()];
    CHECK(eta_std * (n - 1) == -static_cast<std::int64_t>(der.d));
    for (const auto& e : s.entries)
      if (e.eigenvalue == eta_std) CHECK(e.multiplicity >= static_cast<std::uint64_t>((n - 1) * (n - 1)));
    // d counted directly from the elements.
    std::uint64_t direct = 0;
    for (std::uint64_t r = 0; r < g->elements.size(); ++r) direct += fixed_point_count(g->elements[r]) == 0;
    CHECK(direct == der.d);
  }
}

TEST_CASE("ratio bound") {
  const auto v = ratio_verdict(24, 4, 9, -3);
  CHECK(v.bound == Rational(6));
  CHECK(v.ekr_by_ratio);
  const auto w = ratio_verdict(168, 8, 49, -9);
  CHECK(w.bound > Rational(21));
  CHECK_FALSE(w.ekr_by_ratio);
  CHECK_THROWS_AS(ratio_verdict(6, 3, 2, 0), std::domain_error);
}

TEST_CASE("complete unions") {
  const auto f20 = load("F20");
  const auto cu = complete_union_detect(f20->spectrum(), 5, 4);
  CHECK(cu.detected);
  CHECK(cu.strict == Verdict::no);
  const auto sym3 = load("Sym(3)");
  CHECK(complete_union_detect(sym3->spectrum(), 3, 2).strict == Verdict::yes);
  const auto sym4 = load("Sym(4)");
  CHECK_FALSE(complete_union_detect(sym4->spectrum(), 4, 9).detected);
}

TEST_CASE("bad inputs to the trace check") {
  auto s = load("Alt(4)")->spectrum();
  s.entries.back().multiplicity += 1;
  CHECK_FALSE(trace_identities(s, 12, 3).ok());
}
