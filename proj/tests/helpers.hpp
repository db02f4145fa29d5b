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

#include <memory>
#include <string>

#include "ekr/character_table.hpp"
#include "ekr/clique_search.hpp"
#include "ekr/derangement_graph.hpp"
#include "ekr/group_library.hpp"

namespace ekr::testing {

/// Everything the element-level algorithms need for one catalog group.
struct Loaded {
  explicit Loaded(const std::string& key)
      : spec(catalog_group(key)),
        group(build(spec)),
        elements(group),
        classes(elements),
        table(character_table(elements, classes)),
        der(elements, classes) {}

  GroupSpec spec;
  PermutationGroup group;
  ElementTable elements;
  ConjugacyClassTable classes;
  CharacterTable table;
  DerangementIndex der;

  std::size_t n() const { return group.degree(); }
  DerangementSpectrum spectrum() const { return ekr::spectrum(table, derangement_classes(table.classes())); }
};

inline std::unique_ptr<Loaded> load(const std::string& key) { return std::make_unique<Loaded>(key); }

}  // namespace ekr::testing
