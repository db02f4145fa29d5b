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

#include "ekr/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <regex>
#include <set>
#include <sstream>

#include "ekr/digest.hpp"
#include "ekr/module_rank.hpp"
#include "ekr/table_io.hpp"

namespace ekr {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

bool same_classes(const ClassSummary& a, const ConjugacyClassTable& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a.sizes[i] != b[i].size || a.fixed_points[i] != b[i].fixed_points) return false;
  return true;
}

std::string elements_digest(const std::vector<Permutation>& elements) {
  std::string text;
  for (const Permutation& p : elements) text += p.to_cycles() + ";";
  return digest_hex(text);
}

// Heuristic class for the Gram test: derangements whose shortest cycle is as
// long as possible, then of largest order, found by random sampling.
std::optional<Permutation> gram_representative(const PermutationGroup& group, const std::vector<std::size_t>& type,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (!type.empty()) return element_with_cycle_type(group, type, rng);
  std::optional<Permutation> best;
  std::pair<std::size_t, std::uint64_t> best_key{0, 0};
  for (int t = 0; t < 4000; ++t) {
    Permutation g = group.random_element(rng);
    const auto ct = g.cycle_type();
    if (ct.front() == 1) continue;
    const std::pair<std::size_t, std::uint64_t> key{ct.front(), g.order()};
    if (!best || key > best_key) {
      best = g;
      best_key = key;
    }
  }
  return best;
}

}  // namespace

std::string to_string(Flag f) {
  switch (f) {
    case Flag::yes: return "yes";
    case Flag::no: return "no";
    case Flag::unknown: return "unknown";
    case Flag::not_applicable: return "n/a";
    case Flag::not_tried: return "not-tried";
  }
  return "?";
}

WitnessCheck verify_witness(const PermutationGroup& group, const std::vector<Permutation>& elements, bool ekr) {
  for (const Permutation& p : elements)
    if (!group.contains(p)) throw NotAMember("witness element " + p.to_cycles() + " is not in the group");
  const std::size_t n = group.degree();
  WitnessCheck w;
  w.intersecting = true;
  for (std::size_t a = 0; a < elements.size() && w.intersecting; ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      const auto x = elements[a].images(), y = elements[b].images();
      bool meet = false;
      for (std::size_t i = 0; i < n && !meet; ++i) meet = x[i] == y[i];
      if (!meet) {
        w.intersecting = false;
        break;
      }
    }
  const std::set<Permutation> distinct(elements.begin(), elements.end());
  w.maximum = ekr && distinct.size() * n == group.order();
  if (!elements.empty())
    for (std::size_t i = 0; i < n && !w.canonical; ++i) {
      const Point j = elements.front()(static_cast<Point>(i));
      w.canonical = std::all_of(elements.begin(), elements.end(),
                                [&](const Permutation& p) { return p(static_cast<Point>(i)) == j; });
    }
  return w;
}

std::vector<Permutation> set_stabilizer(const PermutationGroup& group, const std::vector<Point>& points,
                                        std::uint64_t cap) {
  if (group.order() > cap) throw CapExceeded("set stabilizer needs an enumerable group");
  std::vector<bool> in(group.degree(), false);
  for (Point p : points) in.at(p) = true;
  std::vector<Permutation> out;
  for_each_element(group, [&](std::uint64_t, std::span<const Point> g) {
    for (Point p : points)
      if (!in[g[p]]) return;
    out.push_back(Permutation::unchecked({g.begin(), g.end()}));
  });
  return out;
}

std::vector<Point> hyperplane_from_notes(const std::string& notes) {
  static const std::regex pattern(R"(hyperplane=([0-9]+(?:,[0-9]+)*))");
  std::smatch m;
  std::vector<Point> out;
  if (!std::regex_search(notes, m, pattern)) return out;
  std::istringstream in(m[1].str());
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(static_cast<Point>(std::stoul(item) - 1));
  return out;
}

std::string literature_note(const std::string& key) {
  static const std::regex family(R"((Sym|Alt)\([0-9]+\)|PGL\(2,[0-9]+\))");
  if (std::regex_match(key, family)) return "strict EKR is known for this family from prior work (not derived here)";
  return "";
}

EkrReport classify(const GroupSpec& spec, const ClassifyOptions& opt) {
  EkrReport r;
  r.key = spec.name;
  Stopwatch clock;
  const PermutationGroup group = build(spec);
  r.degree = group.degree();
  r.order = group.order();
  const std::size_t n = r.degree;
  r.timings["group"] = clock.lap();

  std::optional<ElementTable> elements;
  std::optional<ConjugacyClassTable> classes;
  if (r.order <= opt.caps.enumeration) {
    elements.emplace(group, opt.caps.enumeration);
    classes.emplace(*elements);
  } else {
    r.partial = true;
    r.notes.push_back("group order exceeds the enumeration cap; element-level steps skipped");
  }
  r.timings["classes"] = clock.lap();

  std::optional<CharacterTable> table;
  if (opt.imported_table) {
    table = load_table(*opt.imported_table);
    if (table->classes().group_order != r.order || table->classes().degree != n)
      throw TableInconsistent("imported table does not match the group order or degree");
    if (classes && !same_classes(table->classes(), *classes))
      throw TableInconsistent("imported table classes are not in the computed class order");
  } else if (opt.cache) {
    table = cached_table(*opt.cache, group);
    if (table && classes && !same_classes(table->classes(), *classes)) table.reset();
  }
  if (!table && elements) {
    table = character_table(*elements, *classes);
    if (opt.cache) store_table(*opt.cache, group, *table);
  }
  r.timings["character_table"] = clock.lap();

  std::optional<DerangementSpectrum> spectrum_data;
  if (table) {
    const DerangementData der = derangement_classes(table->classes());
    r.d = der.d;
    spectrum_data = spectrum(*table, der);
    r.tau = spectrum_data->tau;
    r.least_standard = spectrum_data->is_standard_least ? Flag::yes : Flag::no;
    r.unique = !spectrum_data->is_standard_least
                   ? Flag::not_applicable
                   : (spectrum_data->is_standard_unique ? Flag::yes : Flag::no);
    std::ostringstream etas;
    for (const SpectrumEntry& e : spectrum_data->entries) etas << e.eigenvalue << ':' << e.multiplicity << ' ';
    r.certificates.push_back({"spectrum", digest_hex(etas.str()), etas.str()});
    if (spectrum_data->tau < 0 && ratio_verdict(r.order, n, r.d, r.tau).ekr_by_ratio) {
      r.ekr = Verdict::yes;
      r.ekr_reason = "ratio";
    }
  } else {
    r.partial = true;
    r.notes.push_back("no character table available; spectral columns unknown");
  }
  r.timings["spectrum"] = clock.lap();

  std::optional<DerangementIndex> der_index;
  std::optional<Clique> clique;
  if (elements) {
    der_index.emplace(*elements, *classes);
    if (!table) r.d = der_index->ranks.size();
    clique = find_n_clique(*der_index, opt.clique);
    if (clique && clique->size() == n && verify_clique(group, clique->elements)) {
      r.n_clique = Flag::yes;
      r.certificates.push_back({"clique", elements_digest(clique->elements), std::to_string(n) + " elements"});
      if (r.ekr != Verdict::yes) {
        r.ekr = Verdict::yes;
        r.ekr_reason = "clique-coclique";
      }
    } else {
      clique.reset();
    }
  } else {
    r.n_clique = Flag::not_tried;
  }
  r.timings["clique"] = clock.lap();

  if (r.unique == Flag::yes) {
    r.module_by_clique = Flag::not_tried;
  } else if (table && der_index && clique) {
    const ModuleByClique mbc = module_by_clique(*der_index, *table, opt.clique);
    r.module_by_clique = mbc.complete() ? Flag::yes : Flag::unknown;
    std::string text;
    for (const Clique& c : mbc.cliques) text += elements_digest(c.elements);
    r.certificates.push_back({"module-by-clique", digest_hex(text), std::to_string(mbc.cliques.size()) + " cliques"});
  } else if (table && der_index) {
    r.module_by_clique = Flag::unknown;
  }
  r.timings["module_by_clique"] = clock.lap();

  if (der_index && der_index->ranks.size() <= opt.direct_rows) {
    const RankCertificate cert = rank_certificate(build_m(*der_index));
    r.rank_full = cert.full() ? Flag::yes : Flag::no;
    r.rank_mode = "direct";
    r.certificates.push_back({"rank", cert.digest,
                              to_string(cert.mode) + " rank " + std::to_string(cert.rank) + "/" +
                                  std::to_string(cert.cols)});
  } else if (n >= 4) {
    r.rank_mode = "class";
    const auto rep = gram_representative(group, opt.gram_cycle_type, opt.seed);
    if (!rep) {
      r.notes.push_back("no representative found for the Gram class");
    } else {
      try {
        const PairsSpectrumCheck pairs = least_eigenvalue_check(PairsGraph(n));
        const ClassGram cg = class_gram(group, *rep, &pairs, opt.caps.class_orbit);
        r.rank_full = cg.positive_definite ? Flag::yes : Flag::unknown;
        std::ostringstream detail;
        detail << "class of " << rep->to_cycles() << " size " << cg.class_size << ": N = " << cg.lambda << " I + "
               << cg.mu << " A(X_n)" << (cg.pattern_fit ? "" : " (pattern does not fit)");
        std::string gram_text;
        for (std::int64_t x : cg.gram) gram_text += std::to_string(x) + ",";
        r.certificates.push_back({"class-gram", digest_hex(gram_text), detail.str()});
      } catch (const CapExceeded& e) {
        r.partial = true;
        r.notes.push_back(e.what());
      }
    }
  }
  r.timings["rank"] = clock.lap();

  CompleteUnion union_case;
  if (spectrum_data) union_case = complete_union_detect(*spectrum_data, n, r.d);

  std::optional<WitnessCheck> witness;
  const std::vector<Point> hyperplane = hyperplane_from_notes(spec.notes);
  if (!hyperplane.empty() && r.order <= opt.caps.enumeration) {
    const std::vector<Permutation> set = set_stabilizer(group, hyperplane, opt.caps.enumeration);
    witness = verify_witness(group, set, r.ekr == Verdict::yes);
    std::ostringstream detail;
    detail << "hyperplane stabilizer of order " << set.size() << ": intersecting " << witness->intersecting
           << ", maximum " << witness->maximum << ", canonical " << witness->canonical;
    r.certificates.push_back({"witness", elements_digest(set), detail.str()});
  }
  r.timings["special"] = clock.lap();

  const bool condition_b = r.unique == Flag::yes || r.module_by_clique == Flag::yes;
  if (r.ekr == Verdict::yes && condition_b && r.rank_full == Flag::yes) {
    r.strict = Verdict::yes;
    r.strict_reason = "module-method";
  } else if (union_case.detected && union_case.strict == Verdict::no) {
    r.strict = Verdict::no;
    r.strict_reason = "complete-union";
  } else if (witness && witness->refutes_strict()) {
    r.strict = Verdict::no;
    r.strict_reason = "witness";
  }
  if (union_case.detected) r.notes.push_back(union_case.reason);
  if (opt.trust_literature && r.strict == Verdict::unknown) r.annotation = literature_note(r.key);
  return r;
}

}  // namespace ekr
