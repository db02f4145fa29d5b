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

#include "ekr/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ekr/modular.hpp"

namespace ekr {

ClassSummary summarize(const ConjugacyClassTable& classes, std::size_t degree) {
  ClassSummary s;
  s.group_order = classes.group_order();
  s.degree = degree;
  s.exponent = static_cast<std::uint32_t>(classes.exponent());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    s.sizes.push_back(classes[i].size);
    s.fixed_points.push_back(classes[i].fixed_points);
    s.derangement.push_back(classes[i].fixed_points == 0);
    s.inverse.push_back(classes.inverse_class(i));
  }
  return s;
}

std::vector<std::uint64_t> class_constant_matrix(const ElementTable& elements, const ConjugacyClassTable& classes,
                                                 std::size_t i) {
  const std::size_t k = classes.size();
  const std::size_t n = elements.degree();
  const PermutationGroup& group = elements.group();
  std::vector<std::uint64_t> m(k * k, 0);
  std::vector<Point> x_inv(n), prod(n), scratch(2 * n);
  for (std::uint32_t r : classes.members(i)) {
    raw::invert(elements[r], x_inv);
    for (std::size_t l = 0; l < k; ++l) {
      raw::compose(x_inv, classes[l].representative.images(), prod);
      std::size_t j = classes.class_of_rank(*group.rank(prod, scratch));
      ++m[j * k + l];
    }
  }
  return m;
}

ClassConstants class_constants(const ElementTable& elements, const ConjugacyClassTable& classes) {
  ClassConstants c;
  c.k = classes.size();
  for (std::size_t i = 0; i < c.k; ++i) c.matrices.push_back(class_constant_matrix(elements, classes, i));
  return c;
}

namespace {

// A common invariant subspace, stored as RREF rows.
struct Subspace {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(std::vector<std::vector<std::uint64_t>> vectors, std::size_t k, std::uint64_t p) {
  mod::Matrix a(vectors.size(), k);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) a(r, c) = vectors[r][c];
  Subspace s;
  s.pivots = mod::rref(a, p);
  for (std::size_t r = 0; r < s.pivots.size(); ++r)
    s.rows.emplace_back(a.data.begin() + static_cast<std::ptrdiff_t>(r * k),
                        a.data.begin() + static_cast<std::ptrdiff_t>((r + 1) * k));
  return s;
}

// Splits `space` into eigenspaces of the k x k matrix `a` acting on column vectors.
std::vector<Subspace> split(const Subspace& space, const std::vector<std::uint64_t>& a, std::size_t k,
                            std::uint64_t p) {
  const std::size_t m = space.rows.size();
  std::vector<std::vector<std::uint64_t>> images(m, std::vector<std::uint64_t>(k, 0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l)
        if (a[j * k + l] != 0 && space.rows[r][l] != 0)
          acc = mod::add(acc, mod::mul(a[j * k + l] % p, space.rows[r][l], p), p);
      images[r][j] = acc;
    }
  mod::Matrix restricted(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) restricted(s, r) = images[r][space.pivots[s]];

  auto poly = mod::charpoly(restricted, p);
  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda = 0; lambda < p && total < m; ++lambda) {
    if (mod::eval(poly, lambda, p) != 0) continue;
    mod::Matrix shifted = restricted;
    for (std::size_t d = 0; d < m; ++d) shifted(d, d) = mod::sub(shifted(d, d), lambda, p);
    auto ker = mod::kernel(shifted, p);
    std::vector<std::vector<std::uint64_t>> vectors;
    for (const auto& c : ker) {
      std::vector<std::uint64_t> v(k, 0);
      for (std::size_t r = 0; r < m; ++r)
        if (c[r] != 0)
          for (std::size_t j = 0; j < k; ++j) v[j] = mod::add(v[j], mod::mul(c[r], space.rows[r][j], p), p);
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    parts.push_back(make_subspace(std::move(vectors), k, p));
  }
  if (total != m) throw TableInconsistent("class matrix is not diagonalizable modulo " + std::to_string(p));
  return parts;
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

CharacterTable character_table(const ElementTable& elements, const ConjugacyClassTable& classes,
                               std::uint64_t prime) {
  const std::size_t k = classes.size();
  const std::uint64_t order = elements.size();
  const std::uint64_t e = classes.exponent();
  const std::uint64_t p = prime != 0 ? prime : mod::prime_congruent_one(e, 2 * (isqrt(order) + 1));
  if (!mod::is_prime(p) || p % e != 1 || p <= 2 * isqrt(order))
    throw std::invalid_argument("character_table: unsuitable prime " + std::to_string(p));

  std::vector<std::size_t> order_of_use(k);
  std::iota(order_of_use.begin(), order_of_use.end(), 0);
  std::stable_sort(order_of_use.begin(), order_of_use.end(),
                   [&](std::size_t a, std::size_t b) { return classes[a].size < classes[b].size; });

  std::vector<std::vector<std::uint64_t>> identity(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Subspace> done, pending{make_subspace(identity, k, p)};
  for (std::size_t i : order_of_use) {
    if (pending.empty()) break;
    if (i == 0) continue;
    auto a = class_constant_matrix(elements, classes, i);
    std::vector<Subspace> next;
    for (const Subspace& s : pending)
      for (Subspace& part : split(s, a, k, p)) (part.rows.size() == 1 ? done : next).push_back(std::move(part));
    pending = std::move(next);
  }
  for (Subspace& s : pending)
    if (s.rows.size() == 1) done.push_back(std::move(s));
    else throw TableInconsistent("class matrices fail to separate the characters");
  if (done.size() != k) throw TableInconsistent("wrong number of characters");

  const std::uint64_t root = mod::pow(mod::primitive_root(p), (p - 1) / e, p);
  const auto e32 = static_cast<std::uint32_t>(e);
  std::vector<std::vector<Cyclotomic>> values;
  for (const Subspace& s : done) {
    std::vector<std::uint64_t> w = s.rows[0];
    if (w[0] == 0) throw TableInconsistent("eigenvector vanishes at the identity class");
    std::uint64_t scale = mod::inv(w[0], p);
    for (auto& x : w) x = mod::mul(x, scale, p);

    std::uint64_t norm = 0;
    for (std::size_t i = 0; i < k; ++i)
      norm = mod::add(norm, mod::mul(mod::mul(w[i], w[classes.inverse_class(i)], p), mod::inv(classes[i].size % p, p), p), p);
    const std::uint64_t target = mod::mul(order % p, mod::inv(norm, p), p);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d)
      if (order % d == 0 && mod::mul(d, d, p) == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw TableInconsistent("no character degree matches modulo " + std::to_string(p));

    std::vector<std::uint64_t> chi(k);
    for (std::size_t i = 0; i < k; ++i)
      chi[i] = mod::mul(mod::mul(degree, w[i], p), mod::inv(classes[i].size % p, p), p);

    std::vector<Cyclotomic> row;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t o = classes[i].element_order;
      const std::uint64_t z = mod::pow(root, e / o, p);
      const std::uint64_t z_inv = mod::inv(z, p);
      const std::uint64_t o_inv = mod::inv(o % p, p);
      Cyclotomic value(e32, 0);
      for (std::uint64_t j = 0; j < o; ++j) {
        std::uint64_t step = mod::pow(z_inv, j, p), factor = 1, acc = 0;
        for (std::uint64_t t = 0; t < o; ++t) {
          acc = mod::add(acc, mod::mul(chi[classes.power_class(i, t)], factor, p), p);
          factor = mod::mul(factor, step, p);
        }
        std::uint64_t mult = mod::mul(acc, o_inv, p);
        if (mult > degree) throw TableInconsistent("eigenvalue multiplicity out of range");
        value += Cyclotomic::root_power(e32, j * (e / o), static_cast<std::int64_t>(mult));
      }
      row.push_back(std::move(value));
    }
    values.push_back(std::move(row));
  }
  return CharacterTable(summarize(classes, elements.degree()), std::move(values), p);
}

Cyclotomic scaled_inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& a,
                                const std::vector<Cyclotomic>& b) {
  const ClassSummary& c = table.classes();
  Cyclotomic sum(c.exponent, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    sum += a[i] * b[i].conj() * static_cast<std::int64_t>(c.sizes[i]);
  return sum;
}

std::optional<std::int64_t> inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& a,
                                          const std::vector<Cyclotomic>& b) {
  auto scaled = table.field().as_integer(scaled_inner_product(table, a, b));
  const auto order = static_cast<std::int64_t>(table.classes().group_order);
  if (!scaled || *scaled % order != 0) return std::nullopt;
  return *scaled / order;
}

std::vector<Cyclotomic> permutation_character(const ClassSummary& classes) {
  std::vector<Cyclotomic> out;
  for (std::size_t f : classes.fixed_points) out.emplace_back(classes.exponent, static_cast<std::int64_t>(f));
  return out;
}

std::vector<Cyclotomic> standard_class_function(const ClassSummary& classes) {
  std::vector<Cyclotomic> out;
  for (std::size_t f : classes.fixed_points) out.emplace_back(classes.exponent, static_cast<std::int64_t>(f) - 1);
  return out;
}

CharacterTable::CharacterTable(ClassSummary classes, std::vector<std::vector<Cyclotomic>> values, std::uint64_t prime)
    : classes_(std::move(classes)),
      field_(std::make_shared<const CyclotomicField>(classes_.exponent)),
      prime_(prime) {
  const std::size_t k = classes_.size();
  const CyclotomicField& field = *field_;
  if (values.size() != k) throw TableInconsistent("table has " + std::to_string(values.size()) + " rows for " +
                                                  std::to_string(k) + " classes");
  if (classes_.fixed_points.size() != k || classes_.derangement.size() != k)
    throw TableInconsistent("class data has inconsistent lengths");
  if (k == 0 || classes_.sizes[0] != 1) throw TableInconsistent("first class must be the identity");
  std::uint64_t total = 0;
  for (std::uint64_t s : classes_.sizes) {
    if (s == 0 || classes_.group_order % s != 0) throw TableInconsistent("class size does not divide |G|");
    total += s;
  }
  if (total != classes_.group_order) throw TableInconsistent("class sizes do not sum to |G|");

  for (auto& row : values) {
    if (row.size() != k) throw TableInconsistent("character row has the wrong length");
    Character ch;
    auto degree = field.as_integer(row[0]);
    if (!degree || *degree <= 0) throw TableInconsistent("character degree is not a positive integer");
    ch.degree = static_cast<std::uint64_t>(*degree);
    if (classes_.group_order % ch.degree != 0) throw TableInconsistent("character degree does not divide |G|");
    for (auto& v : row) {
      if (v.conductor() != classes_.exponent) throw TableInconsistent("character value has the wrong conductor");
      ch.shadow.push_back(v.value());
    }
    ch.values = std::move(row);
    characters_.push_back(std::move(ch));
  }

  // Columns of conjugate classes are complex conjugates; recover the inverse map if absent.
  if (classes_.inverse.size() != k) {
    classes_.inverse.assign(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k && classes_.inverse[i] == k; ++j) {
        bool match = true;
        for (const Character& ch : characters_)
          if (!field.equal(ch.values[j], ch.values[i].conj())) {
            match = false;
            break;
          }
        if (match) classes_.inverse[i] = j;
      }
    for (std::size_t i = 0; i < k; ++i)
      if (classes_.inverse[i] == k) throw TableInconsistent("no inverse class found");
  }

  std::sort(characters_.begin(), characters_.end(), [&](const Character& a, const Character& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t i = 0; i < k; ++i) {
      for (int part = 0; part < 2; ++part) {
        long double x = part == 0 ? a.shadow[i].real() : a.shadow[i].imag();
        long double y = part == 0 ? b.shadow[i].real() : b.shadow[i].imag();
        if (std::abs(x - y) > 1e-9L) return x < y;
      }
      if (!field.equal(a.values[i], b.values[i])) return field.canonical(a.values[i]) < field.canonical(b.values[i]);
    }
    return false;
  });

  std::uint64_t degree_square_sum = 0;
  for (const Character& ch : characters_) degree_square_sum += ch.degree * ch.degree;
  if (degree_square_sum != classes_.group_order) throw TableInconsistent("sum of squared degrees differs from |G|");

  const auto order = static_cast<std::int64_t>(classes_.group_order);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      auto ip = field.as_integer(scaled_inner_product(*this, characters_[a].values, characters_[b].values));
      if (!ip || *ip != (a == b ? order : 0))
        throw TableInconsistent("row orthogonality fails for characters " + std::to_string(a) + ", " +
                                std::to_string(b));
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic sum(classes_.exponent, 0);
      for (const Character& ch : characters_) sum += ch.values[i] * ch.values[j].conj();
      auto s = field.as_integer(sum);
      std::int64_t expected = i == j ? order / static_cast<std::int64_t>(classes_.sizes[i]) : 0;
      if (!s || *s != expected)
        throw TableInconsistent("column orthogonality fails for classes " + std::to_string(i) + ", " +
                                std::to_string(j));
    }

  const auto standard = standard_class_function(classes_);
  bool found_trivial = false, found_standard = false;
  for (std::size_t c = 0; c < k; ++c) {
    bool trivial = true, is_standard = true;
    for (std::size_t i = 0; i < k; ++i) {
      auto v = field.as_integer(characters_[c].values[i]);
      trivial = trivial && v && *v == 1;
      is_standard = is_standard && v && *v == static_cast<std::int64_t>(classes_.fixed_points[i]) - 1;
    }
    if (trivial) {
      trivial_ = c;
      found_trivial = true;
    }
    if (is_standard && !found_standard) {
      standard_ = c;
      found_standard = true;
    }
  }
  if (!found_trivial) throw TableInconsistent("no trivial character");
  if (!found_standard)
    throw TableInconsistent("no irreducible character equals fix - 1; the action is not 2-transitive");
}

}  // namespace ekr
