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

#include "ekr/derangement_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

DerangementData derangement_classes(const ClassSummary& classes) {
  DerangementData der;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes.derangement[i]) {
      der.class_indices.push_back(i);
      der.d += classes.sizes[i];
    }
  return der;
}

DerangementSpectrum spectrum(const CharacterTable& table, const DerangementData& der) {
  const ClassSummary& classes = table.classes();
  DerangementSpectrum spec;
  for (std::size_t c = 0; c < table.size(); ++c) {
    const Character& ch = table[c];
    Cyclotomic sum(classes.exponent, 0);
    for (std::size_t i : der.class_indices) sum += ch.values[i] * static_cast<std::int64_t>(classes.sizes[i]);
    auto total = table.field().as_integer(sum);
    if (!total) throw TableInconsistent("derangement eigenvalue for character " + std::to_string(c) + " is irrational");
    if (*total % static_cast<std::int64_t>(ch.degree) != 0)
      throw TableInconsistent("derangement eigenvalue for character " + std::to_string(c) + " is not an integer");
    spec.eta.push_back(*total / static_cast<std::int64_t>(ch.degree));
  }
  for (std::size_t c = 0; c < table.size(); ++c) {
    auto it = std::find_if(spec.entries.begin(), spec.entries.end(),
                           [&](const SpectrumEntry& e) { return e.eigenvalue == spec.eta[c]; });
    if (it == spec.entries.end()) {
      spec.entries.push_back({spec.eta[c], {}, 0});
      it = spec.entries.end() - 1;
    }
    it->characters.push_back(c);
    it->multiplicity += table[c].degree * table[c].degree;
  }
  std::sort(spec.entries.begin(), spec.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.eigenvalue > b.eigenvalue; });
  if (!trace_identities(spec, classes.group_order, der.d).ok())
    throw TableInconsistent("derangement spectrum violates a trace identity");
  least_analysis(spec, table);
  return spec;
}

TraceCheck trace_identities(const DerangementSpectrum& spec, std::uint64_t order, std::uint64_t d) {
  __int128 mult = 0, trace = 0, squares = 0;
  for (const SpectrumEntry& e : spec.entries) {
    mult += e.multiplicity;
    trace += static_cast<__int128>(e.multiplicity) * e.eigenvalue;
    squares += static_cast<__int128>(e.multiplicity) * e.eigenvalue * e.eigenvalue;
  }
  TraceCheck check;
  check.multiplicities = mult == static_cast<__int128>(order);
  check.trace = trace == 0;
  check.edges = squares == static_cast<__int128>(order) * d;
  return check;
}

void least_analysis(DerangementSpectrum& spec, const CharacterTable& table) {
  if (spec.entries.empty()) throw std::invalid_argument("least_analysis: empty spectrum");
  const SpectrumEntry& least = spec.entries.back();
  spec.tau = least.eigenvalue;
  const std::size_t standard = table.standard_index();
  spec.is_standard_least = spec.eta[standard] == spec.tau;
  spec.is_standard_unique = spec.is_standard_least && least.characters.size() == 1;
}

RatioVerdict ratio_verdict(std::uint64_t order, std::size_t n, std::uint64_t d, std::int64_t tau) {
  if (tau >= 0) throw std::domain_error("ratio bound needs a negative least eigenvalue");
  // |G| / (1 - d/tau) = |G| (-tau) / (d - tau)
  const auto g = static_cast<std::int64_t>(order);
  const auto dd = static_cast<std::int64_t>(d);
  RatioVerdict v;
  v.bound = Rational(g, 1) * Rational(-tau, dd - tau);
  v.ekr_by_ratio = Rational(tau) == Rational(-dd, static_cast<std::int64_t>(n) - 1);
  return v;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

CompleteUnion complete_union_detect(const DerangementSpectrum& spec, std::size_t n, std::uint64_t d) {
  CompleteUnion cu;
  cu.detected = spec.entries.size() == 2 && spec.entries.front().eigenvalue == static_cast<std::int64_t>(d) &&
                spec.entries.back().eigenvalue == -1;
  if (!cu.detected) return cu;
  if (n > 3) {
    cu.strict = Verdict::no;
    cu.reason = "complete-union: n^{|G|/n} independent sets";
  } else {
    cu.strict = Verdict::yes;
    cu.reason = "complete-union: n = 3";
  }
  return cu;
}

}  // namespace ekr
