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

// Acceptance checks. Each criterion prints one line
//   criterion N: PASS|FAIL: detail
// followed by indented detail lines for anything that did not match.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ekr/clique_search.hpp"
#include "ekr/derangement_graph.hpp"
#include "ekr/group_library.hpp"
#include "ekr/module_rank.hpp"
#include "ekr/oracle.hpp"
#include "ekr/pairs_graph.hpp"
#include "ekr/pipeline.hpp"
#include "ekr/report.hpp"

using namespace ekr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& what) {
    pass = false;
    details.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

// Reference values for the small-group table: least, n-clique, unique, rank.
// n-clique is "Yes", "?" or "--"; unique is "Yes", "No" or "N/A".
struct ReferenceRow {
  const char* key;
  bool least;
  const char* clique;
  const char* unique;
  bool rank;
};

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {"F20", true, "--", "Yes", false},
      {"PGL(2,5)", true, "Yes", "No", true},
      {"Alt(5)", true, "--", "Yes", true},
      {"PGL(3,2)", true, "Yes", "No", false},
      {"AGL(1,7)", true, "--", "Yes", false},
      {"AGL(3,2)", true, "--", "Yes", true},
      {"PGL(2,7)", true, "Yes", "No", true},
      {"AGammaL(1,8)", false, "Yes", "N/A", true},
      {"PSL(3,2)", true, "--", "Yes", true},
      {"AGL(1,8)", true, "--", "Yes", false},
      {"PGammaL(2,8)", true, "--", "Yes", true},
      {"AGL(2,3)", true, "Yes", "No", true},
      {"ASL(2,3)", false, "Yes", "N/A", false},
      {"PSL(2,8)", true, "--", "Yes", true},
      {"AGammaL(1,9)", false, "Yes", "N/A", false},
      {"AGL(1,9)", true, "--", "Yes", false},
      {"3^2:Q8", true, "--", "Yes", false},
      {"PGammaL(2,9)", false, "Yes", "N/A", true},
      {"M10", true, "--", "Yes", true},
      {"PSigmaL(2,9)", true, "?", "No", true},
      {"PGL(2,9)", true, "Yes", "No", true},
      {"Alt(6)", true, "--", "Yes", true},
      {"M11", true, "--", "Yes", true},
      {"PSL(2,11)@11", true, "--", "Yes", false},
      {"AGL(1,11)", true, "--", "Yes", false},
      {"M12", true, "--", "Yes", true},
      {"M11@12", true, "--", "Yes", true},
      {"PGL(2,11)", true, "Yes", "No", true},
      {"PGL(2,11)[660]", true, "--", "Yes", true},
      {"PSL(3,3)", true, "--", "Yes", false},
      {"AGL(1,13)", true, "--", "Yes", false},
      {"PGL(2,13)", true, "Yes", "No", true},
      {"PSL(2,13)", true, "--", "Yes", true},
      {"Alt(8)@15", true, "--", "Yes", false},
      {"Alt(7)@15", true, "--", "Yes", false},
      {"AGL(4,2)", true, "Yes", "Yes", true},
      {"2^4:Sp(4,2)", false, "Yes", "N/A", false},
      {"AGammaL(2,4)", false, "Yes", "N/A", true},
      {"AGL(2,4)", true, "Yes", "No", true},
      {"2^4:Alt(7)", true, "Yes", "Yes", true},
      {"2^4:Alt(6)", true, "Yes", "No", false},
      {"ASigmaL(2,4)", false, "Yes", "N/A", false},
      {"ASL(2,4)", false, "Yes", "N/A", false},
      {"AGammaL(1,16)", false, "Yes", "N/A", false},
      {"2^4:(Z15:Z2)", false, "Yes", "N/A", false},
      {"AGL(1,16)", true, "--", "Yes", false},
      {"PGammaL(2,16)", true, "--", "Yes", true},
      {"PSL(2,16):2", true, "--", "Yes", true},
      {"PSL(2,16)", true, "--", "Yes", true},
      {"AGL(1,17)", true, "--", "Yes", false},
      {"PGL(2,17)", true, "--", "No", true},
      {"PSL(2,17)", true, "--", "Yes", true},
      {"AGL(1,19)", true, "--", "Yes", false},
      {"PGL(2,19)", true, "--", "No", true},
      {"PSL(2,19)", true, "--", "Yes", true},
  };
  return rows;
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

Outcome criterion_1() {
  Outcome out;
  const auto& rows = reference_rows();
  const auto& table = small_groups_table();
  if (rows.size() != table.size()) out.fail("reference has " + std::to_string(rows.size()) + " rows, library table " +
                                            std::to_string(table.size()));
  std::size_t matched = 0;
  double total = 0, slowest = 0;
  std::string slowest_key;
  for (const ReferenceRow& ref : rows) {
    const auto start = Clock::now();
    const EkrReport r = classify(catalog_group(ref.key));
    const double t = seconds_since(start);
    total += t;
    if (t > slowest) {
      slowest = t;
      slowest_key = ref.key;
    }
    const std::size_t before = out.details.size();
    const std::string k = ref.key;
    out.expect(r.least_standard == (ref.least ? Flag::yes : Flag::no),
               k + ": least expected " + yes_no(ref.least) + ", got " + cell(r.least_standard));
    out.expect(cell(r.unique) == ref.unique, k + ": unique expected " + ref.unique + ", got " + cell(r.unique));
    out.expect(r.rank_full == (ref.rank ? Flag::yes : Flag::no),
               k + ": rank expected " + yes_no(ref.rank) + ", got " + cell(r.rank_full));
    out.expect(r.ekr == Verdict::yes, k + ": EKR expected Yes, got " + cell(r.ekr));
    if (std::string(ref.clique) == "Yes")
      out.expect(r.n_clique == Flag::yes, k + ": n-clique expected Yes, got " + cell(r.n_clique));
    out.expect(t < 600, k + ": took " + std::to_string(t) + " s, limit 600 s");
    if (out.details.size() == before) ++matched;
  }
  out.expect(total < 3600, "total runtime " + std::to_string(total) + " s, limit 3600 s");
  std::ostringstream s;
  s << matched << "/" << rows.size() << " rows match; total " << static_cast<int>(total) << " s, slowest "
    << slowest_key << " " << static_cast<int>(slowest) << " s";
  out.summary = s.str();
  return out;
}

Outcome criterion_2() {
  Outcome out;
  const auto start = Clock::now();
  std::ostringstream s;
  for (const char* key : {"M10", "M11", "M12", "M21"}) {
    const EkrReport r = classify(catalog_group(key));
    const std::string k = key;
    const auto n = static_cast<std::int64_t>(r.degree);
    out.expect(r.tau * (n - 1) == -static_cast<std::int64_t>(r.d),
               k + ": least eigenvalue " + std::to_string(r.tau) + " is not -d/(n-1) with d = " + std::to_string(r.d));
    out.expect(r.least_standard == Flag::yes, k + ": standard character does not give the least eigenvalue");
    out.expect(r.unique == Flag::yes, k + ": least eigenvalue not unique to the standard character (unique " +
                                          cell(r.unique) + ")");
    std::string rank_detail;
    for (const Certificate& c : r.certificates)
      if (c.kind == "rank") rank_detail = c.detail;
    out.expect(r.rank_full == Flag::yes, k + ": M not of full column rank (" + rank_detail + ")");
    out.expect(r.strict == Verdict::yes,
               k + ": strict expected Yes, got " + cell(r.strict) +
                   (r.strict_reason.empty() ? std::string() : " (" + r.strict_reason + ")"));
    s << k << " strict " << cell(r.strict) << "; ";
  }
  const double t = seconds_since(start);
  out.expect(t < 900, "combined runtime " + std::to_string(t) + " s, limit 900 s");
  s << "runtime " << static_cast<int>(t) << " s";
  out.summary = s.str();
  return out;
}

// Shared body of criteria 3 and 4: N = lambda I + mu A(X_n) entrywise.
Outcome class_gram_criterion(const std::string& key, const std::vector<std::size_t>& type, std::uint64_t size,
                             std::int64_t lambda, std::int64_t mu, std::optional<std::int64_t> least,
                             double limit) {
  Outcome out;
  const auto start = Clock::now();
  const PermutationGroup g = build(catalog_group(key));
  std::mt19937_64 rng(1);
  const auto rep = element_with_cycle_type(g, type, rng);
  if (!rep) {
    out.fail("no element of the requested cycle type found");
    return out;
  }
  const std::size_t n = g.degree();
  const PairsGraph x(n);
  const PairsSpectrumCheck pairs = least_eigenvalue_check(x);
  const ClassGram cg = class_gram(g, *rep, &pairs);
  const std::size_t v = x.size();
  out.expect(v == (n - 1) * (n - 2), "pairs graph has " + std::to_string(v) + " vertices");
  out.expect(cg.class_size == size, "class size " + std::to_string(cg.class_size) + ", expected " + std::to_string(size));
  out.expect(cg.gram.size() == v * v, "Gram matrix has the wrong shape");
  std::size_t mismatches = 0;
  if (cg.gram.size() == v * v)
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b)
        mismatches += cg.gram[a * v + b] != (a == b ? lambda : x.adjacent(a, b) ? mu : 0);
  out.expect(mismatches == 0, std::to_string(mismatches) + " entries differ from lambda I + mu A(X_n)");
  out.expect(cg.lambda == lambda && cg.mu == mu,
             "fitted lambda " + std::to_string(cg.lambda) + ", mu " + std::to_string(cg.mu));
  out.expect(cg.swap_entry_zero, "entry ((1,2),(2,1)) is not 0");
  out.expect(pairs.annihilated && pairs.least_bound_holds, "pairs graph least eigenvalue bound not certified");
  if (least) out.expect(cg.least_bound() >= *least, "least eigenvalue bound " + std::to_string(cg.least_bound()));
  out.expect(cg.positive_definite, "positive definiteness not established");
  const double t = seconds_since(start);
  out.expect(t < limit, "runtime " + std::to_string(t) + " s, limit " + std::to_string(limit) + " s");
  std::ostringstream s;
  s << key << " class of size " << cg.class_size << ": N = " << cg.lambda << " I + " << cg.mu
    << " A(X_" << n << "), least eigenvalue >= " << cg.least_bound() << "; runtime " << static_cast<int>(t) << " s";
  out.summary = s.str();
  return out;
}

Outcome criterion_3() { return class_gram_criterion("M22", {11, 11}, 40320, 1920, 96, 96, 1200); }

Outcome criterion_4() {
  const std::uint64_t t = 443520;
  return class_gram_criterion("M23", {23}, t, t / 22, t / (22 * 21), std::nullopt, 1e9);
}

// Every group processed by the other criteria.
std::vector<std::string> processed_keys() {
  std::vector<std::string> keys = {"Sym(3)", "Sym(4)", "Alt(4)"};
  for (const TableRow& row : small_groups_table()) keys.push_back(row.key);
  for (const char* k : {"M21", "M22"}) keys.push_back(k);
  return keys;
}

Outcome criterion_5() {
  Outcome out;
  std::size_t checked = 0;
  for (const std::string& key : processed_keys()) {
    const PermutationGroup g = build(catalog_group(key));
    const ElementTable elements(g);
    const ConjugacyClassTable classes(elements);
    const CharacterTable table = character_table(elements, classes);
    const DerangementData der = derangement_classes(table.classes());
    const DerangementSpectrum s = spectrum(table, der);
    const auto n = static_cast<std::int64_t>(g.degree());
    const TraceCheck tc = trace_identities(s, g.order(), der.d);
    out.expect(tc.multiplicities, key + ": multiplicities do not sum to |G|");
    out.expect(tc.trace, key + ": sum of mult * eta is not 0");
    out.expect(tc.edges, key + ": sum of mult * eta^2 is not |G| d");
    const std::int64_t eta_std = s.eta[table.standard_index()];
    out.expect(eta_std * (n - 1) == -static_cast<std::int64_t>(der.d), key + ": eta_standard is not -d/(n-1)");
    std::uint64_t mult = 0;
    for (const SpectrumEntry& e : s.entries)
      if (e.eigenvalue * (n - 1) == -static_cast<std::int64_t>(der.d)) mult = e.multiplicity;
    out.expect(mult >= static_cast<std::uint64_t>((n - 1) * (n - 1)),
               key + ": multiplicity of -d/(n-1) is " + std::to_string(mult));
    ++checked;
  }
  out.summary = std::to_string(checked) + " groups checked";
  return out;
}

Outcome criterion_6() {
  Outcome out;
  const auto start = Clock::now();
  std::set<std::string> keys = {"Sym(3)", "Sym(4)", "Alt(4)", "M10"};
  for (const GroupSpec& spec : shipped_catalog()) keys.insert(spec.name);
  for (const TableRow& row : small_groups_table()) keys.insert(row.key);
  std::size_t checked = 0;
  for (const std::string& key : keys) {
    const PermutationGroup g = build(catalog_group(key));
    if (g.order() > 2000) continue;
    const ElementTable elements(g);
    const ConjugacyClassTable classes(elements);
    const CharacterTable table = character_table(elements, classes);
    const DerangementSpectrum s = spectrum(table, derangement_classes(table.classes()));
    const DerangementIndex der(elements, classes);
    const BruteSpectrum brute = brute_spectrum(der);
    std::vector<std::pair<std::int64_t, std::uint64_t>> exact;
    for (const SpectrumEntry& e : s.entries) exact.emplace_back(e.eigenvalue, e.multiplicity);
    out.expect(brute.integral, key + ": numerical eigenvalues not within 1e-6 of integers");
    out.expect(brute.entries == exact, key + ": dense spectrum differs from the character spectrum");
    const AlphaResult alpha = brute_alpha(der);
    out.expect(alpha.alpha * g.degree() == g.order(),
               key + ": independence number " + std::to_string(alpha.alpha) + ", expected |G|/n");
    ++checked;
  }
  const double t = seconds_since(start);
  out.expect(t < 600, "combined runtime " + std::to_string(t) + " s, limit 600 s");
  out.summary = std::to_string(checked) + " groups with |G| <= 2000; runtime " + std::to_string(static_cast<int>(t)) + " s";
  return out;
}

Outcome criterion_7() {
  Outcome out;
  std::ostringstream s;
  for (const auto& [key, count] : std::vector<std::pair<std::string, int>>{{"F20", 625}, {"Alt(4)", 64}}) {
    const EkrReport r = classify(catalog_group(key));
    out.expect(r.strict == Verdict::no && r.strict_reason == "complete-union",
               key + ": strict " + cell(r.strict) + " (" + r.strict_reason + ")");
    const PermutationGroup g = build(catalog_group(key));
    const ElementTable elements(g);
    const ConjugacyClassTable classes(elements);
    const AlphaResult a = brute_alpha(DerangementIndex(elements, classes));
    out.expect(a.count && *a.count == count, key + ": maximum independent set count " +
                                                 (a.count ? a.count->str() : std::string("not computed")));
    s << key << " " << (a.count ? a.count->str() : "?") << " maximum sets; ";
  }
  const GroupSpec spec = catalog_group("PGL(3,2)");
  const PermutationGroup g = build(spec);
  const auto line = hyperplane_from_notes(spec.notes);
  const WitnessCheck w = verify_witness(g, set_stabilizer(g, line), true);
  out.expect(line.size() == 3, "PGL(3,2): no Fano line registered");
  out.expect(w.refutes_strict(), "PGL(3,2): line stabilizer does not refute strict EKR");
  const EkrReport r = classify(spec);
  out.expect(r.strict == Verdict::no && r.strict_reason == "witness", "PGL(3,2): strict " + cell(r.strict));
  s << "PGL(3,2) line stabilizer: intersecting " << w.intersecting << ", maximum " << w.maximum << ", canonical "
    << w.canonical;
  out.summary = s.str();
  return out;
}

Outcome criterion_8() {
  Outcome out;
  for (const char* key : {"Sym(3)", "F20", "PGL(2,5)"}) {
    const std::string k = key;
    const PermutationGroup g = build(catalog_group(key));
    const ElementTable elements(g);
    const ConjugacyClassTable classes(elements);
    const CharacterTable table = character_table(elements, classes);
    const DerangementIndex der(elements, classes);
    const std::size_t n = g.degree(), expected = (n - 1) * (n - 1) + 1;
    const std::size_t rh = exact_rank(matrix_h(elements)), rbar = exact_rank(module_matrices(der).h_bar);
    out.expect(rh == expected && rbar == expected,
               k + ": rank(H) " + std::to_string(rh) + ", rank(H-bar) " + std::to_string(rbar));
    bool projections = true;
    for (Point i = 0; i < n; ++i)
      for (Point j = 0; j < n; ++j) projections = projections && standard_projection_check(elements, classes, table, i, j);
    out.expect(projections, k + ": E_std does not fix v_ij - 1/n");
    const GramCheck gram = gram_l(elements);
    out.expect(gram.matches && gram.positive_definite, k + ": L^T L differs from the general-constant form");
    out.expect(b_identity_submatrix(g).identity, k + ": no identity block in B");
  }
  out.summary = "Sym(3), F20, PGL(2,5)";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> criteria;
  bool m23 = false;
  app.add_option("--criterion", criteria, "Criteria to run (default: all)")->check(CLI::Range(1, 8));
  app.add_flag("--m23", m23, "Allow criterion 4, which enumerates a class of 443520 elements");
  CLI11_PARSE(app, argc, argv);
  if (criteria.empty()) criteria = {1, 2, 3, 4, 5, 6, 7, 8};

  const std::map<int, std::function<Outcome()>> runners = {
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},
      {5, criterion_5}, {6, criterion_6}, {7, criterion_7}, {8, criterion_8}};
  bool all = true;
  for (int c : criteria) {
    if (c == 4 && !m23) {
      std::cout << "criterion 4: SKIPPED: needs --m23" << std::endl;
      continue;
    }
    Outcome o;
    try {
      o = runners.at(c)();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << ": " << o.summary << std::endl;
    for (const std::string& d : o.details) std::cout << "  " << d << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
