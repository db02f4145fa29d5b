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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ekr/character_table.hpp"

namespace ekr {

/// Text format:
///   k e |G| [n]
///   k lines "size fix_count is_derangement"
///   k lines of k values, each "c0,c1,...,c_{e-1}", separated by whitespace
/// Lines starting with '#' are ignored. The degree n is optional on input and
/// defaults to 1 + the fix count of the identity class.
CharacterTable read_table(std::istream& in);
void write_table(std::ostream& out, const CharacterTable& table);

CharacterTable load_table(const std::filesystem::path& path);
void save_table(const std::filesystem::path& path, const CharacterTable& table);

/// FNV-1a over the degree and the sorted generator image tables.
std::string group_cache_key(const PermutationGroup& group);

/// Reads "<dir>/<key>.table" when present.
std::optional<CharacterTable> cached_table(const std::filesystem::path& dir, const PermutationGroup& group);
void store_table(const std::filesystem::path& dir, const PermutationGroup& group, const CharacterTable& table);

}  // namespace ekr
