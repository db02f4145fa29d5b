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

#include "ekr/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ekr {
namespace {

std::istringstream next_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return std::istringstream(line);
  }
  throw std::invalid_argument("character table file ends early");
}

}  // namespace

CharacterTable read_table(std::istream& in) {
  std::size_t k = 0;
  std::uint32_t e = 0;
  std::uint64_t order = 0;
  auto header = next_line(in);
  if (!(header >> k >> e >> order) || k == 0 || e == 0 || order == 0)
    throw std::invalid_argument("character table header must be 'k e |G|'");
  ClassSummary s;
  s.group_order = order;
  s.exponent = e;
  std::size_t degree = 0;
  if (header >> degree) s.degree = degree;

  for (std::size_t i = 0; i < k; ++i) {
    auto line = next_line(in);
    std::uint64_t size = 0;
    std::size_t fix = 0;
    int der = 0;
    if (!(line >> size >> fix >> der) || (der != 0 && der != 1))
      throw std::invalid_argument("class line " + std::to_string(i + 1) + " must be 'size fix_count is_derangement'");
    if ((fix == 0) != (der == 1))
      throw std::invalid_argument("class line " + std::to_string(i + 1) + ": derangement flag contradicts fix count");
    s.sizes.push_back(size);
    s.fixed_points.push_back(fix);
    s.derangement.push_back(der == 1);
  }
  if (s.degree == 0) s.degree = s.fixed_points[0];
  if (s.fixed_points[0] != s.degree) throw std::invalid_argument("identity class must fix every point");

  std::vector<std::vector<Cyclotomic>> values;
  for (std::size_t c = 0; c < k; ++c) {
    auto line = next_line(in);
    std::vector<Cyclotomic> row;
    std::string token;
    while (line >> token) row.push_back(Cyclotomic::from_coefficients(e, token));
    if (row.size() != k)
      throw std::invalid_argument("character line " + std::to_string(c + 1) + " needs " + std::to_string(k) +
                                  " values");
    values.push_back(std::move(row));
  }
  return CharacterTable(std::move(s), std::move(values));
}

void write_table(std::ostream& out, const CharacterTable& table) {
  const ClassSummary& s = table.classes();
  out << s.size() << ' ' << s.exponent << ' ' << s.group_order << ' ' << s.degree << '\n';
  for (std::size_t i = 0; i < s.size(); ++i)
    out << s.sizes[i] << ' ' << s.fixed_points[i] << ' ' << (s.derangement[i] ? 1 : 0) << '\n';
  for (const Character& ch : table.characters()) {
    for (std::size_t i = 0; i < ch.values.size(); ++i) out << (i ? " " : "") << ch.values[i].to_coefficients();
    out << '\n';
  }
}

CharacterTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_table(in);
}

void save_table(const std::filesystem::path& path, const CharacterTable& table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_table(out, table);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string group_cache_key(const PermutationGroup& group) {
  std::vector<std::vector<Point>> images;
  for (const Permutation& g : group.generators()) images.emplace_back(g.images().begin(), g.images().end());
  std::sort(images.begin(), images.end());
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  mix(group.degree());
  for (const auto& img : images)
    for (Point x : img) mix(x);
  std::ostringstream key;
  key << std::hex << std::setw(16) << std::setfill('0') << h;
  return key.str();
}

std::optional<CharacterTable> cached_table(const std::filesystem::path& dir, const PermutationGroup& group) {
  auto path = dir / (group_cache_key(group) + ".table");
  if (!std::filesystem::exists(path)) return std::nullopt;
  return load_table(path);
}

void store_table(const std::filesystem::path& dir, const PermutationGroup& group, const CharacterTable& table) {
  std::filesystem::create_directories(dir);
  save_table(dir / (group_cache_key(group) + ".table"), table);
}

}  // namespace ekr
