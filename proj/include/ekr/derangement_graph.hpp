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
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ekr/character_table.hpp"

namespace ekr {

struct DerangementData {
  std::vector<std::size_t> class_indices;  ///< classes with fixed-point-free representatives
  std::uint64_t d = 0;                      ///< number of derangements
};

DerangementData derangement_classes(const ClassSummary& classes);

struct SpectrumEntry {
  std::int64_t eigenvalue = 0;
  std::vector<std::size_t> characters;  ///< rows of the character table attaining it
  std::uint64_t multiplicity = 0;       ///< sum of chi(1)^2 over those rows
};

/// Exact spectrum of the derangement graph, entries sorted by eigenvalue descending.
///
/// Every eigenvalue is a rational integer: the derangements form a union of
/// classes closed under coprime powers, so each eta_chi is Galois-invariant.
struct DerangementSpectrum {
  std::vector<SpectrumEntry> entries;
  std::vector<std::int64_t> eta;  ///< eigenvalue per character row
  std::int64_t tau = 0;           ///< least eigenvalue
  bool is_standard_least = false;
  bool is_standard_unique = false;
};

/// Computes eta_chi exactly; throws TableInconsistent if an eigenvalue is not an
/// integer or a trace identity fails.
DerangementSpectrum spectrum(const CharacterTable& table, const DerangementData& der);

struct TraceCheck {
  bool multiplicities = false;  ///< sum of multiplicities = |G|
  bool trace = false;           ///< sum mult * eta = 0
  bool edges = false;           ///< sum mult * eta^2 = |G| d
  bool ok() const noexcept { return multiplicities && trace && edges; }
};

TraceCheck trace_identities(const DerangementSpectrum& spec, std::uint64_t order, std::uint64_t d);

/// Recomputes tau and the two standard-character flags from the entries.
void least_analysis(DerangementSpectrum& spec, const CharacterTable& table);

using Rational = boost::rational<std::int64_t>;

struct RatioVerdict {
  Rational bound;  ///< |G| / (1 - d / tau)
  bool ekr_by_ratio = false;
};

/// Throws std::domain_error when tau >= 0.
RatioVerdict ratio_verdict(std::uint64_t order, std::size_t n, std::uint64_t d, std::int64_t tau);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct CompleteUnion {
  bool detected = false;
  Verdict strict = Verdict::unknown;  ///< the strictness consequence when detected
  std::string reason;
};

/// The derangement graph is a disjoint union of complete graphs exactly when its
/// distinct eigenvalues are {d, -1}.
CompleteUnion complete_union_detect(const DerangementSpectrum& spec, std::size_t n, std::uint64_t d);

}  // namespace ekr
