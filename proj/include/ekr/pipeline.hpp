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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekr/clique_search.hpp"
#include "ekr/derangement_graph.hpp"
#include "ekr/group_library.hpp"
#include "ekr/oracle.hpp"

namespace ekr {

/// Outcome of a single column of the report.
enum class Flag { yes, no, unknown, not_applicable, not_tried };
std::string to_string(Flag f);

struct ClassifyOptions {
  Caps caps;
  CliqueBudget clique;
  /// Largest derangement count for which M is assembled directly.
  std::uint64_t direct_rows = 1'000'000;
  /// Class used for the Gram-matrix rank test when M is not assembled
  /// directly; chosen automatically when empty.
  std::vector<std::size_t> gram_cycle_type;
  std::optional<std::filesystem::path> cache;
  /// Character table to use instead of computing one.
  std::optional<std::filesystem::path> imported_table;
  bool trust_literature = false;
  std::uint64_t seed = 1;
};

struct Certificate {
  std::string kind;    ///< "spectrum", "clique", "rank", "class-gram", "witness", ...
  std::string digest;  ///< 16 hex digits
  std::string detail;
};

struct EkrReport {
  std::string key;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::uint64_t d = 0;
  std::int64_t tau = 0;
  Flag least_standard = Flag::unknown;
  Flag n_clique = Flag::unknown;
  Verdict ekr = Verdict::unknown;
  std::string ekr_reason;  ///< "ratio" or "clique-coclique"
  Flag unique = Flag::unknown;
  Flag module_by_clique = Flag::not_tried;
  Flag rank_full = Flag::unknown;
  std::string rank_mode;  ///< "direct" or "class"
  Verdict strict = Verdict::unknown;
  std::string strict_reason;  ///< "module-method", "complete-union", "witness" or empty
  std::string annotation;     ///< literature note, never a verdict
  std::vector<Certificate> certificates;
  std::map<std::string, double> timings;
  std::vector<std::string> notes;  ///< caps hit and skipped steps
  bool partial = false;            ///< some step was skipped for a cap
};

struct WitnessCheck {
  bool intersecting = false;
  bool maximum = false;
  bool canonical = false;
  /// A maximum intersecting set that is not canonical refutes strict EKR.
  bool refutes_strict() const noexcept { return intersecting && maximum && !canonical; }
};

/// Checks a proposed intersecting set. `ekr` says whether EKR is established
/// for the group, which maximality needs. Throws NotAMember.
WitnessCheck verify_witness(const PermutationGroup& group, const std::vector<Permutation>& elements, bool ekr);

/// Elements of the group fixing a set of points setwise (enumerated).
std::vector<Permutation> set_stabilizer(const PermutationGroup& group, const std::vector<Point>& points,
                                        std::uint64_t cap = Caps{}.enumeration);

/// 0-indexed points listed in a "hyperplane=1,2,..." note, if any.
std::vector<Point> hyperplane_from_notes(const std::string& notes);

/// Runs the decision procedure on one group. Caps that are hit leave the
/// affected columns unknown and set `partial`; they never produce a verdict.
EkrReport classify(const GroupSpec& spec, const ClassifyOptions& options = {});

/// The literature status of the groups whose strict EKR property is known
/// from prior work, for annotation only.
std::string literature_note(const std::string& key);

}  // namespace ekr
