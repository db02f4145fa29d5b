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

#include "ekr/group_library.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>
#include <string_view>

namespace ekr {
namespace detail {
extern const std::string_view kCatalogText;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t gl_order(std::size_t dim, std::uint64_t q) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < dim; ++i) r *= ipow(q, dim) - ipow(q, i);
  return r;
}

std::vector<std::uint32_t> identity_matrix(std::size_t dim) {
  std::vector<std::uint32_t> m(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1;
  return m;
}

std::vector<std::uint32_t> apply(const FiniteField& f, std::size_t dim, const SemilinearMap& map,
                                 const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> w(dim), out(dim, 0);
  const std::uint64_t power = ipow(f.characteristic(), map.frobenius);
  for (std::size_t i = 0; i < dim; ++i) w[i] = f.pow(v[i], power);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[i] = f.add(out[i], f.mul(map.matrix[i * dim + j], w[j]));
  return out;
}

std::vector<std::uint32_t> decode(std::uint64_t index, std::uint32_t q, std::size_t dim) {
  std::vector<std::uint32_t> v(dim);
  for (std::size_t i = dim; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return v;
}

std::uint64_t encode(const std::vector<std::uint32_t>& v, std::uint32_t q) {
  std::uint64_t index = 0;
  for (std::uint32_t x : v) index = index * q + x;
  return index;
}

std::string to_cycle_string(const std::vector<Point>& images) {
  return Permutation(images).to_cycles();
}

std::string hyperplane_note(std::size_t dim, std::uint32_t q) {
  // Points with first coordinate 0 come first in lexicographic order.
  const std::uint64_t count = (ipow(q, dim - 1) - 1) / (q - 1);
  std::string note = "hyperplane=";
  for (std::uint64_t i = 1; i <= count; ++i) note += (i > 1 ? "," : "") + std::to_string(i);
  return note;
}

const char* family_name(ProjectiveFamily f) {
  switch (f) {
    case ProjectiveFamily::PGL: return "PGL";
    case ProjectiveFamily::PSL: return "PSL";
    case ProjectiveFamily::PGammaL: return "PGammaL";
    case ProjectiveFamily::PSigmaL: return "PSigmaL";
  }
  return "";
}

const char* family_name(AffineFamily f) {
  switch (f) {
    case AffineFamily::AGL: return "AGL";
    case AffineFamily::ASL: return "ASL";
    case AffineFamily::AGammaL: return "AGammaL";
    case AffineFamily::ASigmaL: return "ASigmaL";
  }
  return "";
}

SemilinearMap scalar_diagonal(const FiniteField& f, std::size_t dim) {
  SemilinearMap m{identity_matrix(dim), 0};
  m.matrix[0] = f.primitive_element();
  return m;
}

}  // namespace

std::vector<Permutation> GroupSpec::permutations() const {
  std::vector<Permutation> out;
  for (const std::string& g : generators) out.push_back(parse_cycles(g, degree));
  if (out.empty()) out.push_back(Permutation::identity(degree));
  return out;
}

PermutationGroup build(const GroupSpec& spec) {
  PermutationGroup g = build_group(spec.permutations());
  if (g.degree() != spec.degree) throw CatalogError(spec.name + ": degree mismatch");
  if (g.order() != spec.expected_order)
    throw CatalogError(spec.name + ": generators give order " + std::to_string(g.order()) + ", expected " +
                       std::to_string(spec.expected_order));
  if (transitivity_degree(g) < 2) throw CatalogError(spec.name + ": action is not 2-transitive");
  return g;
}

std::vector<SemilinearMap> special_linear_generators(const FiniteField& f, std::size_t dim) {
  std::vector<SemilinearMap> gens;
  std::vector<std::uint32_t> basis;
  for (std::uint32_t i = 0, w = 1; i < f.extension_degree(); ++i, w = f.mul(w, f.primitive_element()))
    basis.push_back(w);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      for (std::uint32_t a : basis) {
        SemilinearMap m{identity_matrix(dim), 0};
        m.matrix[i * dim + j] = a;
        gens.push_back(std::move(m));
      }
    }
  return gens;
}

GroupSpec projective_semilinear(const std::string& name, const FiniteField& f, std::size_t dim,
                                const std::vector<SemilinearMap>& maps, std::uint64_t expected_order) {
  const std::uint32_t q = f.order();
  std::vector<std::vector<std::uint32_t>> points;
  std::map<std::uint64_t, Point> index;
  for (std::uint64_t x = 1; x < ipow(q, dim); ++x) {
    auto v = decode(x, q, dim);
    auto first = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
    if (*first != 1) continue;
    index[x] = static_cast<Point>(points.size());
    points.push_back(std::move(v));
  }
  GroupSpec spec;
  spec.name = name;
  spec.degree = points.size();
  spec.expected_order = expected_order;
  spec.provenance = "constructed";
  for (const SemilinearMap& m : maps) {
    std::vector<Point> images;
    for (const auto& v : points) {
      auto w = apply(f, dim, m, v);
      auto first = std::find_if(w.begin(), w.end(), [](std::uint32_t c) { return c != 0; });
      if (first == w.end()) throw CatalogError(name + ": singular generator matrix");
      std::uint32_t s = f.inv(*first);
      for (auto& c : w) c = f.mul(c, s);
      images.push_back(index.at(encode(w, q)));
    }
    try {
      spec.generators.push_back(to_cycle_string(images));
    } catch (const std::invalid_argument&) {
      throw CatalogError(name + ": singular generator matrix");
    }
  }
  if (dim >= 3) spec.notes = "projective space PG(" + std::to_string(dim - 1) + "," + std::to_string(q) + "); " +
                             hyperplane_note(dim, q);
  return spec;
}

GroupSpec projective_group(ProjectiveFamily family, std::size_t dim, std::uint32_t q) {
  if (dim < 2 || dim > 4) throw CatalogError("projective groups are supported in dimension 2 to 4");
  FiniteField f(q);
  const std::uint64_t pgl = gl_order(dim, q) / (q - 1);
  const std::uint64_t scalars = std::gcd<std::uint64_t>(dim, q - 1);
  const std::uint64_t k = f.extension_degree();
  auto maps = special_linear_generators(f, dim);
  std::uint64_t order = pgl / scalars;
  if (family == ProjectiveFamily::PGL || family == ProjectiveFamily::PGammaL) {
    maps.push_back(scalar_diagonal(f, dim));
    order = pgl;
  }
  if (family == ProjectiveFamily::PGammaL || family == ProjectiveFamily::PSigmaL) {
    if (k > 1) maps.push_back({identity_matrix(dim), 1});
    order *= k;
  }
  return projective_semilinear(std::string(family_name(family)) + "(" + std::to_string(dim) + "," +
                                   std::to_string(q) + ")",
                               f, dim, maps, order);
}

GroupSpec affine_semilinear(const std::string& name, const FiniteField& f, std::size_t dim,
                            const std::vector<SemilinearMap>& maps, std::uint64_t expected_order) {
  const std::uint32_t q = f.order();
  const std::uint64_t count = ipow(q, dim);
  GroupSpec spec;
  spec.name = name;
  spec.degree = count;
  spec.expected_order = expected_order;
  spec.provenance = "constructed";
  for (const SemilinearMap& m : maps) {
    std::vector<Point> images;
    for (std::uint64_t x = 0; x < count; ++x) images.push_back(static_cast<Point>(encode(apply(f, dim, m, decode(x, q, dim)), q)));
    try {
      spec.generators.push_back(to_cycle_string(images));
    } catch (const std::invalid_argument&) {
      throw CatalogError(name + ": singular generator matrix");
    }
  }
  // Translations by w * e_i for an additive basis {w} of GF(q).
  for (std::size_t i = 0; i < dim; ++i)
    for (std::uint32_t b = 0, w = 1; b < f.extension_degree(); ++b, w = f.mul(w, f.primitive_element())) {
      std::vector<Point> images;
      for (std::uint64_t x = 0; x < count; ++x) {
        auto v = decode(x, q, dim);
        v[i] = f.add(v[i], w);
        images.push_back(static_cast<Point>(encode(v, q)));
      }
      spec.generators.push_back(to_cycle_string(images));
    }
  return spec;
}

GroupSpec affine_group(AffineFamily family, std::size_t dim, std::uint32_t q) {
  FiniteField f(q);
  const std::uint64_t k = f.extension_degree();
  const std::uint64_t points = ipow(q, dim);
  auto maps = special_linear_generators(f, dim);
  std::uint64_t order = points * gl_order(dim, q) / (q - 1);
  if (family == AffineFamily::AGL || family == AffineFamily::AGammaL) {
    maps.push_back(scalar_diagonal(f, dim));
    order = points * gl_order(dim, q);
  }
  if (family == AffineFamily::AGammaL || family == AffineFamily::ASigmaL) {
    if (k > 1) maps.push_back({identity_matrix(dim), 1});
    order *= k;
  }
  return affine_semilinear(std::string(family_name(family)) + "(" + std::to_string(dim) + "," + std::to_string(q) + ")",
                           f, dim, maps, order);
}

GroupSpec affine_group(const std::string& name, std::uint32_t p, std::size_t dim,
                       const std::vector<std::vector<std::uint32_t>>& matrices, std::uint64_t expected_order) {
  FiniteField f(p);
  if (f.extension_degree() != 1) throw CatalogError("affine_group: matrices must be over a prime field");
  std::vector<SemilinearMap> maps;
  for (const auto& m : matrices) {
    if (m.size() != dim * dim) throw CatalogError(name + ": matrix has the wrong size");
    maps.push_back({m, 0});
  }
  return affine_semilinear(name, f, dim, maps, expected_order);
}

std::vector<GroupSpec> parse_catalog(const std::string& text) {
  std::vector<GroupSpec> out;
  std::stringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split(t, '|');
    if (fields.size() < 4) throw CatalogError("catalog line " + std::to_string(line_no) + ": expected 5 fields");
    GroupSpec spec;
    spec.name = fields[0];
    try {
      spec.degree = std::stoul(fields[1]);
      spec.expected_order = std::stoull(fields[2]);
    } catch (const std::exception&) {
      throw CatalogError("catalog line " + std::to_string(line_no) + ": malformed degree or order");
    }
    spec.generators = split(fields[3], ';');
    spec.provenance = "catalog";
    if (fields.size() > 4) spec.notes = fields[4];
    out.push_back(std::move(spec));
  }
  return out;
}

const std::vector<GroupSpec>& shipped_catalog() {
  static const std::vector<GroupSpec> catalog = parse_catalog(std::string(detail::kCatalogText));
  return catalog;
}

namespace {

GroupSpec renamed(GroupSpec spec, const std::string& name, const std::string& notes) {
  spec.name = name;
  if (!notes.empty()) spec.notes = spec.notes.empty() ? notes : notes + "; " + spec.notes;
  return spec;
}

std::map<std::string, std::function<GroupSpec()>> named_constructions() {
  return {
      {"F20", [] { return renamed(affine_group(AffineFamily::AGL, 1, 5), "F20", "Frobenius group Z5:Z4 = AGL(1,5)"); }},
      {"Alt(5)", [] { return renamed(projective_group(ProjectiveFamily::PSL, 2, 5), "Alt(5)", "PSL(2,5) on 6 points"); }},
      {"Alt(6)", [] { return renamed(projective_group(ProjectiveFamily::PSL, 2, 9), "Alt(6)", "PSL(2,9) on 10 points"); }},
      {"PSL(3,2)",
       [] { return renamed(projective_group(ProjectiveFamily::PSL, 2, 7), "PSL(3,2)", "PSL(3,2) = PSL(2,7) on 8 points"); }},
      {"PGL(2,11)[660]",
       [] {
         return renamed(projective_group(ProjectiveFamily::PSL, 2, 11), "PGL(2,11)[660]",
                        "listed as PGL(2,11) of order 660; the group is PSL(2,11) on 12 points");
       }},
      {"PSL(2,16):2",
       [] {
         FiniteField f(16);
         auto maps = special_linear_generators(f, 2);
         maps.push_back({{1, 0, 0, 1}, 2});
         return renamed(projective_semilinear("PSL(2,16):2", f, 2, maps, 8160), "PSL(2,16):2",
                        "listed as PGL(2,16) of order 8160; PGL(2,16) = PSL(2,16), so this is PSL(2,16) with x -> x^4");
       }},
      {"M10",
       [] {
         FiniteField f(9);
         auto maps = special_linear_generators(f, 2);
         maps.push_back({{f.primitive_element(), 0, 0, 1}, 1});
         return projective_semilinear("M10", f, 2, maps, 720);
       }},
      {"M21", [] { return renamed(projective_group(ProjectiveFamily::PSL, 3, 4), "M21", "PSL(3,4) on 21 points"); }},
      {"Alt(8)@15",
       [] { return renamed(projective_group(ProjectiveFamily::PSL, 4, 2), "Alt(8)@15", "Alt(8) = PSL(4,2) on 15 points"); }},
      {"3^2:Q8",
       [] { return affine_group("3^2:Q8", 3, 2, {{0, 1, 2, 0}, {1, 1, 1, 2}}, 72); }},
      {"2^4:(Z15:Z2)",
       [] {
         FiniteField f(16);
         return affine_semilinear("2^4:(Z15:Z2)", f, 1, {{{f.primitive_element()}, 0}, {{1}, 2}}, 480);
       }},
  };
}

const std::regex kFamilyKey(R"((PGL|PSL|PGammaL|PSigmaL|AGL|ASL|AGammaL|ASigmaL)\((\d+),(\d+)\))");

}  // namespace

GroupSpec catalog_group(const std::string& key) {
  for (const GroupSpec& spec : shipped_catalog())
    if (spec.name == key) return spec;
  static const auto named = named_constructions();
  if (auto it = named.find(key); it != named.end()) return it->second();
  std::smatch m;
  if (std::regex_match(key, m, kFamilyKey)) {
    const std::string fam = m[1];
    const std::size_t dim = std::stoul(m[2]);
    const auto q = static_cast<std::uint32_t>(std::stoul(m[3]));
    try {
      if (fam[0] == 'P') {
        ProjectiveFamily f = fam == "PGL"       ? ProjectiveFamily::PGL
                             : fam == "PSL"     ? ProjectiveFamily::PSL
                             : fam == "PGammaL" ? ProjectiveFamily::PGammaL
                                                : ProjectiveFamily::PSigmaL;
        return projective_group(f, dim, q);
      }
      AffineFamily f = fam == "AGL"       ? AffineFamily::AGL
                       : fam == "ASL"     ? AffineFamily::ASL
                       : fam == "AGammaL" ? AffineFamily::AGammaL
                                          : AffineFamily::ASigmaL;
      if (dim < 1 || std::pow(q, dim) > 65535) throw CatalogError(key + ": degree too large");
      return affine_group(f, dim, q);
    } catch (const std::invalid_argument& e) {
      throw CatalogError(key + ": " + e.what());
    }
  }
  throw CatalogError("unknown group key '" + key + "'");
}

const std::vector<TableRow>& small_groups_table() {
  static const std::vector<TableRow> rows = {
      {5, "F20", "Z5:Z4"},
      {6, "PGL(2,5)", "PGL(2,5)"},
      {6, "Alt(5)", "Alt(5)"},
      {7, "PGL(3,2)", "PGL(3,2)"},
      {7, "AGL(1,7)", "(Z7:Z3):Z2"},
      {8, "AGL(3,2)", "2^3:PSL(3,2)"},
      {8, "PGL(2,7)", "PGL(2,7)"},
      {8, "AGammaL(1,8)", "(2^3:Z7):Z3"},
      {8, "PSL(3,2)", "PSL(3,2)"},
      {8, "AGL(1,8)", "2^3:Z7"},
      {9, "PGammaL(2,8)", "PSL(2,8):Z3"},
      {9, "AGL(2,3)", "((3^2:Q8):Z3):Z2"},
      {9, "ASL(2,3)", "(3^2:Q8):Z3"},
      {9, "PSL(2,8)", "PSL(2,8)"},
      {9, "AGammaL(1,9)", "(3^2:Z8):Z2"},
      {9, "AGL(1,9)", "3^2:Z8"},
      {9, "3^2:Q8", "3^2:Q8"},
      {10, "PGammaL(2,9)", "(Alt(6)xZ2):Z2"},
      {10, "M10", "M10"},
      {10, "PSigmaL(2,9)", "Alt(6).Z2"},
      {10, "PGL(2,9)", "PGL(2,9)"},
      {10, "Alt(6)", "Alt(6)"},
      {11, "M11", "M11"},
      {11, "PSL(2,11)@11", "PSL(2,11)"},
      {11, "AGL(1,11)", "(Z11:Z5):Z2"},
      {12, "M12", "M12"},
      {12, "M11@12", "M11"},
      {12, "PGL(2,11)", "PGL(2,11)"},
      {12, "PGL(2,11)[660]", "PGL(2,11)"},
      {13, "PSL(3,3)", "PSL(3,3)"},
      {13, "AGL(1,13)", "(Z13:Z4):Z3"},
      {14, "PGL(2,13)", "PGL(2,13)"},
      {14, "PSL(2,13)", "PSL(2,13)"},
      {15, "Alt(8)@15", "Alt(8)"},
      {15, "Alt(7)@15", "Alt(7)"},
      {16, "AGL(4,2)", "2^4:Alt(8)"},
      {16, "2^4:Sp(4,2)", "(2^4:Alt(6)):Z2"},
      {16, "AGammaL(2,4)", "((2^4:Alt(5)):Z3):Z2"},
      {16, "AGL(2,4)", "(2^4:Alt(5)):Z3"},
      {16, "2^4:Alt(7)", "2^4:Alt(7)"},
      {16, "2^4:Alt(6)", "2^4:Alt(6)"},
      {16, "ASigmaL(2,4)", "(2^4:Alt(5)):Z2"},
      {16, "ASL(2,4)", "2^4:Alt(5)"},
      {16, "AGammaL(1,16)", "((2^4:Z5):Z3):Z4"},
      {16, "2^4:(Z15:Z2)", "((2^4:Z5):Z3):Z2"},
      {16, "AGL(1,16)", "(2^4:Z5):Z3"},
      {17, "PGammaL(2,16)", "PSL(2,16):Z4"},
      {17, "PSL(2,16):2", "PGL(2,16)"},
      {17, "PSL(2,16)", "PSL(2,16)"},
      {17, "AGL(1,17)", "Z17:Z16"},
      {18, "PGL(2,17)", "PGL(2,17)"},
      {18, "PSL(2,17)", "PSL(2,17)"},
      {19, "AGL(1,19)", "(Z19:Z9):Z2"},
      {20, "PGL(2,19)", "PGL(2,19)"},
      {20, "PSL(2,19)", "PSL(2,19)"},
  };
  return rows;
}

const std::vector<std::string>& mathieu_keys() {
  static const std::vector<std::string> keys = {"M10", "M11", "M12", "M21", "M22", "M23", "M24"};
  return keys;
}

}  // namespace ekr
