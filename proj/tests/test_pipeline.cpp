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

#include <filesystem>

#include "ekr/pipeline.hpp"
#include "ekr/report.hpp"
#include "ekr/table_io.hpp"
#include "helpers.hpp"

using namespace ekr;

namespace {

void check_invariants(const EkrReport& r) {
  CAPTURE(r.key);
  if (r.strict == Verdict::yes) {
    CHECK(r.ekr == Verdict::yes);
    CHECK(r.rank_full == Flag::yes);
    CHECK((r.unique == Flag::yes || r.module_by_clique == Flag::yes));
    CHECK(r.strict_reason == "module-method");
  }
  if (r.strict == Verdict::no) CHECK((r.strict_reason == "complete-union" || r.strict_reason == "witness"));
  if (r.unique == Flag::not_applicable) CHECK(r.least_standard == Flag::no);
  CHECK(r.tau * static_cast<std::int64_t>(r.degree - 1) <= -static_cast<std::int64_t>(r.d));
  CHECK(r.d < r.order);
}

}  // namespace

TEST_CASE("verdicts for small groups") {
  const EkrReport f20 = classify(catalog_group("F20"));
  CHECK(f20.ekr == Verdict::yes);
  CHECK(f20.rank_full == Flag::no);
  CHECK(f20.strict == Verdict::no);
  CHECK(f20.strict_reason == "complete-union");
  check_invariants(f20);

  const EkrReport m11 = classify(catalog_group("M11"));
  CHECK(m11.least_standard == Flag::yes);
  CHECK(m11.unique == Flag::yes);
  CHECK(m11.rank_full == Flag::yes);
  CHECK(m11.strict == Verdict::yes);
  check_invariants(m11);

  const EkrReport pgl32 = classify(catalog_group("PGL(3,2)"));
  CHECK(pgl32.ekr == Verdict::yes);
  CHECK(pgl32.rank_full == Flag::no);
  CHECK(pgl32.strict == Verdict::no);
  CHECK(pgl32.strict_reason == "witness");
  check_invariants(pgl32);

  const EkrReport agl = classify(catalog_group("AGammaL(1,8)"));
  CHECK(agl.least_standard == Flag::no);
  CHECK(agl.unique == Flag::not_applicable);
  CHECK(agl.n_clique == Flag::yes);
  CHECK(agl.ekr == Verdict::yes);
  CHECK(agl.ekr_reason == "clique-coclique");
  CHECK(agl.module_by_clique == Flag::yes);
  CHECK(agl.strict == Verdict::yes);
  check_invariants(agl);
}

TEST_CASE("classification is deterministic") {
  const GroupSpec spec = catalog_group("PGL(2,7)");
  const EkrReport a = classify(spec), b = classify(spec);
  CHECK(report_digest(a) == report_digest(b));
  CHECK(report_digest(a) != report_digest(classify(catalog_group("PSL(3,2)"))));
}

TEST_CASE("intersecting-set witnesses") {
  const GroupSpec spec = catalog_group("PGL(3,2)");
  const PermutationGroup g = build(spec);
  const auto line = hyperplane_from_notes(spec.notes);
  CHECK(line.size() == 3);
  const auto stab = set_stabilizer(g, line);
  CHECK(stab.size() == 24);
  const WitnessCheck w = verify_witness(g, stab, true);
  CHECK(w.intersecting);
  CHECK(w.maximum);
  CHECK_FALSE(w.canonical);
  CHECK(w.refutes_strict());

  const auto coset = coset_mapping(g, 2, 5);
  const WitnessCheck c = verify_witness(g, coset, true);
  CHECK(c.intersecting);
  CHECK(c.maximum);
  CHECK(c.canonical);
  CHECK_FALSE(c.refutes_strict());
  CHECK_FALSE(verify_witness(g, coset, false).maximum);

  const Permutation id = Permutation::identity(7);
  std::optional<Permutation> der;
  for_each_element(g, [&](std::uint64_t, std::span<const Point> x) {
    if (!der && fixed_point_count(x) == 0) der = Permutation(std::vector<Point>(x.begin(), x.end()));
  });
  REQUIRE(der);
  CHECK_FALSE(verify_witness(g, {id, *der}, true).intersecting);
  CHECK_THROWS_AS(verify_witness(g, {parse_cycles("(1,2)", 7)}, true), NotAMember);

  CHECK(hyperplane_from_notes("affine; hyperplane=1,2,4 more") == std::vector<Point>{0, 1, 3});
  CHECK(hyperplane_from_notes("none").empty());
}

TEST_CASE("cached and imported tables give the same report") {
  const auto dir = std::filesystem::temp_directory_path() / "ekr_pipeline_test";
  std::filesystem::remove_all(dir);
  const GroupSpec spec = catalog_group("PSL(2,8)");
  ClassifyOptions opt;
  opt.cache = dir;
  const EkrReport first = classify(spec, opt);
  CHECK(cached_table(dir, build(spec)).has_value());
  const EkrReport second = classify(spec, opt);
  CHECK(report_digest(first) == report_digest(second));

  const auto loaded = ekr::testing::load("PSL(2,8)");
  const auto file = dir / "imported.table";
  save_table(file, loaded->table);
  ClassifyOptions imported;
  imported.imported_table = file;
  CHECK(report_digest(classify(spec, imported)) == report_digest(first));

  const auto other = dir / "other.table";
  save_table(other, ekr::testing::load("PGL(2,7)")->table);
  imported.imported_table = other;
  CHECK_THROWS_AS(classify(spec, imported), TableInconsistent);
  std::filesystem::remove_all(dir);
}

TEST_CASE("literature annotations never change verdicts") {
  const GroupSpec spec = catalog_group("PGL(2,5)");
  ClassifyOptions opt;
  const EkrReport plain = classify(spec, opt);
  opt.trust_literature = true;
  const EkrReport annotated = classify(spec, opt);
  CHECK(plain.strict == annotated.strict);
  if (annotated.strict == Verdict::unknown) CHECK_FALSE(annotated.annotation.empty());
  CHECK(plain.annotation.empty());
  CHECK(literature_note("PGL(2,19)") != "");
  CHECK(literature_note("M11") == "");
}

TEST_CASE("inputs that are not 2-transitive are rejected") {
  const GroupSpec cyclic{"C5", 5, 5, {"(1,2,3,4,5)"}, "test", ""};
  CHECK_THROWS_AS(classify(cyclic), CatalogError);
}

TEST_CASE("caps leave columns unknown") {
  ClassifyOptions opt;
  opt.caps.enumeration = 100;
  const EkrReport r = classify(catalog_group("PGL(2,7)"), opt);
  CHECK(r.partial);
  CHECK(r.strict == Verdict::unknown);
  CHECK_FALSE(r.notes.empty());
}
