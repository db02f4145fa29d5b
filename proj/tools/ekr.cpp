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

// Command-line front end: classify groups, reproduce the small-degree table,
// run the Mathieu checks, verify witnesses and query the brute-force oracle.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ekr/module_rank.hpp"
#include "ekr/oracle.hpp"
#include "ekr/pipeline.hpp"
#include "ekr/report.hpp"
#include "ekr/table_io.hpp"

namespace {

using namespace ekr;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitPartial = 2;

struct CommonOptions {
  std::string format = "json";
  std::string output;
  std::string cache;
  std::uint64_t enum_cap = Caps{}.enumeration;
  std::uint64_t orbit_cap = Caps{}.class_orbit;
  std::uint64_t clique_nodes = CliqueBudget{}.nodes;
  std::size_t clique_attempts = CliqueBudget{}.attempts;
  bool trust_literature = false;

  ClassifyOptions classify() const {
    ClassifyOptions o;
    o.caps.enumeration = enum_cap;
    o.caps.class_orbit = orbit_cap;
    o.clique.nodes = clique_nodes;
    o.clique.attempts = clique_attempts;
    if (!cache.empty()) o.cache = cache;
    o.trust_literature = trust_literature;
    return o;
  }
};

void add_common(CLI::App* app, CommonOptions& c) {
  app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("-o,--output", c.output, "Write the report to a file instead of stdout");
  app->add_option("--cache", c.cache, "Character table cache directory");
  app->add_option("--enum-cap", c.enum_cap, "Largest group order enumerated element by element");
  app->add_option("--orbit-cap", c.orbit_cap, "Largest conjugacy class closed under conjugation");
  app->add_option("--clique-nodes", c.clique_nodes, "Backtracking nodes per clique attempt");
  app->add_option("--clique-attempts", c.clique_attempts, "Clique attempts for module-by-clique");
  app->add_flag("--trust-literature", c.trust_literature, "Annotate verdicts known from prior work");
}

// A key from the built-in catalog, or a file holding one catalog record.
GroupSpec resolve_group(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream text;
    text << in.rdbuf();
    auto specs = parse_catalog(text.str());
    if (specs.size() != 1) throw CatalogError(arg + ": expected exactly one group record");
    return specs.front();
  }
  return catalog_group(arg);
}

std::vector<std::size_t> parse_cycle_type(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoul(item));
  std::sort(out.begin(), out.end());
  return out;
}

int write_reports(const std::vector<EkrReport>& reports, const CommonOptions& c) {
  const ReportFormat format = parse_format(c.format);
  if (c.output.empty()) {
    emit_report(reports, format, std::cout);
  } else {
    std::ofstream out(c.output);
    if (!out) throw std::runtime_error("cannot open " + c.output);
    emit_report(reports, format, out);
  }
  const bool partial = std::any_of(reports.begin(), reports.end(), [](const EkrReport& r) { return r.partial; });
  return partial ? kExitPartial : kExitOk;
}

// Classifies the specs on `jobs` threads; results keep the input order.
std::vector<EkrReport> classify_all(const std::vector<GroupSpec>& specs, const ClassifyOptions& options,
                                    std::size_t jobs) {
  std::vector<EkrReport> reports(specs.size());
  std::vector<std::string> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        reports[i] = classify(specs[i], options);
      } catch (const std::exception& e) {
        errors[i] = specs[i].name + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::string& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  return reports;
}

void add_gram_certificate(EkrReport& report, const PermutationGroup& group, const std::vector<std::size_t>& type,
                          std::uint64_t cap) {
  std::mt19937_64 rng(1);
  auto rep = element_with_cycle_type(group, type, rng);
  if (!rep) {
    report.notes.push_back("no element of the requested cycle type found");
    return;
  }
  const PairsSpectrumCheck pairs = least_eigenvalue_check(PairsGraph(group.degree()));
  const ClassGram cg = class_gram(group, *rep, &pairs, cap);
  std::ostringstream detail;
  detail << "class of " << rep->to_cycles() << " size " << cg.class_size << ": N = " << cg.lambda << " I + " << cg.mu
         << " A(X_n), pattern " << (cg.pattern_fit ? "fits" : "does not fit") << ", least eigenvalue >= "
         << cg.least_bound() << (cg.positive_definite ? ", positive definite" : "");
  report.certificates.push_back({"class-gram", "", detail.str()});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erdos-Ko-Rado verification for 2-transitive permutation groups"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string group_arg, table_file, gram_type, set_file;

  auto* classify_cmd = app.add_subcommand("classify", "Classify one group");
  classify_cmd->add_option("-g,--group", group_arg, "Catalog key or catalog-format file")->required();
  classify_cmd->add_option("--table", table_file, "Imported character table");
  classify_cmd->add_option("--gram-class", gram_type, "Cycle type for the class Gram test, e.g. 11,11");
  add_common(classify_cmd, common);

  std::size_t degree_max = 20, jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* table_cmd = app.add_subcommand("table", "Classify the small-degree table");
  table_cmd->add_option("--degree-max", degree_max, "Largest degree included");
  table_cmd->add_option("-j,--jobs", jobs, "Worker threads");
  add_common(table_cmd, common);

  std::vector<int> include, opt_in;
  auto* mathieu_cmd = app.add_subcommand("mathieu", "Mathieu groups M10, M11, M12, M21 and optionally larger ones");
  mathieu_cmd->add_option("--include", include, "Also run 22 and/or 23")->check(CLI::IsMember({22, 23}));
  mathieu_cmd->add_option("--opt-in", opt_in, "Run 24 through the double 12-cycle class")->check(CLI::IsMember({24}));
  add_common(mathieu_cmd, common);

  auto* witness_cmd = app.add_subcommand("witness", "Check a proposed maximum intersecting set");
  witness_cmd->add_option("-g,--group", group_arg, "Catalog key or catalog-format file")->required();
  witness_cmd->add_option("--set", set_file, "File with one permutation per line in cycle notation");
  add_common(witness_cmd, common);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force independence number and spectrum");
  oracle_cmd->add_option("-g,--group", group_arg, "Catalog key or catalog-format file")->required();
  add_common(oracle_cmd, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) {
      ClassifyOptions options = common.classify();
      if (!table_file.empty()) options.imported_table = table_file;
      if (!gram_type.empty()) options.gram_cycle_type = parse_cycle_type(gram_type);
      return write_reports({classify(resolve_group(group_arg), options)}, common);
    }
    if (table_cmd->parsed()) {
      std::vector<GroupSpec> specs;
      for (const TableRow& row : small_groups_table())
        if (row.n <= degree_max) specs.push_back(catalog_group(row.key));
      return write_reports(classify_all(specs, common.classify(), jobs), common);
    }
    if (mathieu_cmd->parsed()) {
      const ClassifyOptions options = common.classify();
      std::vector<EkrReport> reports;
      for (const char* key : {"M10", "M11", "M12", "M21"}) reports.push_back(classify(catalog_group(key), options));
      if (std::count(include.begin(), include.end(), 22)) {
        const GroupSpec spec = catalog_group("M22");
        reports.push_back(classify(spec, options));
        add_gram_certificate(reports.back(), build(spec), {11, 11}, options.caps.class_orbit);
      }
      if (std::count(include.begin(), include.end(), 23)) {
        ClassifyOptions o = options;
        o.gram_cycle_type = {23};
        reports.push_back(classify(catalog_group("M23"), o));
      }
      if (std::count(opt_in.begin(), opt_in.end(), 24)) {
        ClassifyOptions o = options;
        o.gram_cycle_type = {12, 12};
        o.caps.class_orbit = std::max<std::uint64_t>(o.caps.class_orbit, 25'000'000);
        reports.push_back(classify(catalog_group("M24"), o));
      }
      return write_reports(reports, common);
    }
    if (witness_cmd->parsed()) {
      const GroupSpec spec = resolve_group(group_arg);
      const PermutationGroup group = build(spec);
      std::vector<Permutation> set;
      if (set_file.empty()) {
        const auto points = hyperplane_from_notes(spec.notes);
        if (points.empty()) throw std::invalid_argument("no --set given and the group has no registered hyperplane");
        set = set_stabilizer(group, points, common.enum_cap);
      } else {
        std::ifstream in(set_file);
        if (!in) throw std::runtime_error("cannot open " + set_file);
        std::string line;
        while (std::getline(in, line))
          if (!line.empty() && line[0] != '#') set.push_back(parse_cycles(line, group.degree()));
      }
      const EkrReport report = classify(spec, common.classify());
      const WitnessCheck w = verify_witness(group, set, report.ekr == Verdict::yes);
      nlohmann::json j{{"key", spec.name},
                       {"size", set.size()},
                       {"intersecting", w.intersecting},
                       {"maximum", w.maximum},
                       {"canonical", w.canonical},
                       {"refutes_strict", w.refutes_strict()}};
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }
    if (oracle_cmd->parsed()) {
      const PermutationGroup group = build(resolve_group(group_arg));
      const ElementTable elements(group, common.enum_cap);
      const ConjugacyClassTable classes(elements);
      const DerangementIndex der(elements, classes);
      const AlphaResult alpha = brute_alpha(der);
      const BruteSpectrum spec = brute_spectrum(der);
      nlohmann::json j{{"key", group_arg},
                       {"order", group.order()},
                       {"alpha", alpha.alpha},
                       {"ekr", alpha.alpha * group.degree() == group.order()},
                       {"components", alpha.components},
                       {"max_deviation", static_cast<double>(spec.max_deviation)}};
      if (alpha.count) j["count"] = alpha.count->str();
      for (const auto& [value, mult] : spec.entries) j["spectrum"].push_back({value, mult});
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
