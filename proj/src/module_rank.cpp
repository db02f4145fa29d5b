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

#include "ekr/module_rank.hpp"

#include <algorithm>

namespace ekr {
namespace {

// Off-diagonal columns hit by pi: (i, pi(i)) with both below n-1.
void offdiag_hits(std::span<const Point> pi, std::vector<std::uint32_t>& out) {
  const std::size_t n = pi.size();
  out.clear();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = pi[i];
    if (j + 1 < n && j != i) out.push_back(static_cast<std::uint32_t>(offdiag_column(n, i, j)));
  }
}

BinaryMatrix select(const BinaryMatrix& m, std::size_t first_row, std::size_t last_row, std::size_t first_col,
                    std::size_t last_col) {
  BinaryMatrix out;
  out.cols = last_col - first_col;
  for (std::size_t r = first_row; r < last_row; ++r) {
    std::vector<std::uint32_t> row;
    for (std::uint32_t c : m.rows[r])
      if (c >= first_col && c < last_col) row.push_back(static_cast<std::uint32_t>(c - first_col));
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

BinaryMatrix ModuleMatrices::m() const { return select(h_bar, 1, 1 + derangements, n, h_bar.cols); }

BinaryMatrix ModuleMatrices::b() const { return select(h_bar, 1 + derangements, h_bar.row_count(), 0, n); }

ModuleMatrices module_matrices(const DerangementIndex& der) {
  const ElementTable& el = *der.elements;
  const std::size_t n = el.degree();
  ModuleMatrices mm;
  mm.n = n;
  mm.derangements = der.ranks.size();
  mm.row_ranks.push_back(0);
  mm.row_ranks.insert(mm.row_ranks.end(), der.ranks.begin(), der.ranks.end());
  for (std::uint64_t r = 1; r < el.size(); ++r)
    if (!der.is_derangement(r)) mm.row_ranks.push_back(static_cast<std::uint32_t>(r));
  mm.h_bar.cols = n + (n - 1) * (n - 2);
  std::vector<std::uint32_t> hits;
  for (std::uint32_t r : mm.row_ranks) {
    const auto pi = el[r];
    std::vector<std::uint32_t> row;
    for (std::size_t x = 0; x < n; ++x)
      if (pi[x] == x) row.push_back(static_cast<std::uint32_t>(x));
    offdiag_hits(pi, hits);
    for (std::uint32_t c : hits) row.push_back(static_cast<std::uint32_t>(n + c));
    mm.h_bar.rows.push_back(std::move(row));
  }
  return mm;
}

BinaryMatrix matrix_h(const ElementTable& elements) {
  const std::size_t n = elements.degree();
  BinaryMatrix h;
  h.cols = n * n;
  for (std::uint64_t r = 0; r < elements.size(); ++r) {
    const auto pi = elements[r];
    std::vector<std::uint32_t> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(static_cast<std::uint32_t>(i * n + pi[i]));
    h.rows.push_back(std::move(row));
  }
  return h;
}

BinaryMatrix build_m(const DerangementIndex& der) {
  const std::size_t n = der.elements->degree();
  BinaryMatrix m;
  m.cols = (n - 1) * (n - 2);
  std::vector<std::uint32_t> hits;
  for (std::uint32_t r : der.ranks) {
    offdiag_hits((*der.elements)[r], hits);
    m.rows.push_back(hits);
  }
  return m;
}

BinaryMatrix build_m_class(const PermutationGroup& group, const Permutation& rep, std::uint64_t cap) {
  const std::size_t n = group.degree();
  BinaryMatrix m;
  m.cols = (n - 1) * (n - 2);
  std::vector<std::uint32_t> hits;
  conjugation_orbit(
      group, rep,
      [&](std::span<const Point> pi) {
        offdiag_hits(pi, hits);
        m.rows.push_back(hits);
      },
      cap);
  return m;
}

GramCheck gram_l(const ElementTable& elements) {
  const std::size_t n = elements.degree();
  const std::size_t dim = (n - 1) * (n - 1);
  GramCheck g;
  g.dim = dim;
  g.gram.assign(dim * dim, 0);
  std::vector<std::size_t> hits;
  for (std::uint64_t r = 0; r < elements.size(); ++r) {
    const auto pi = elements[r];
    hits.clear();
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (pi[i] + 1u < n) hits.push_back(i * (n - 1) + pi[i]);
    for (std::size_t a : hits)
      for (std::size_t b : hits) ++g.gram[a * dim + b];
  }
  const auto order = static_cast<std::int64_t>(elements.size());
  const auto nn = static_cast<std::int64_t>(n);
  g.diagonal = order / nn;
  g.off = order / (nn * (nn - 1));
  g.matches = true;
  for (std::size_t a = 0; a < dim && g.matches; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t i = a / (n - 1), j = a % (n - 1), k = b / (n - 1), l = b % (n - 1);
      const std::int64_t want = a == b ? g.diagonal : (i != k && j != l ? g.off : 0);
      if (g.gram[a * dim + b] != want) {
        g.matches = false;
        break;
      }
    }
  // Eigenvalues of A(K_{n-1}) x A(K_{n-1}) are (n-2)^2, -(n-2) and 1.
  g.positive_definite = g.matches && g.diagonal - g.off * (nn - 2) > 0 && g.diagonal + g.off > 0;
  return g;
}

ClassGram class_gram(const PermutationGroup& group, const Permutation& rep, const PairsSpectrumCheck* pairs,
                     std::uint64_t cap) {
  const std::size_t n = group.degree();
  const PairsGraph graph(n);
  const std::size_t m = graph.size();
  ClassGram cg;
  cg.n = n;
  cg.gram.assign(m * m, 0);
  std::vector<std::uint32_t> hits;
  cg.class_size = conjugation_orbit(
      group, rep,
      [&](std::span<const Point> pi) {
        offdiag_hits(pi, hits);
        for (std::uint32_t a : hits) {
          std::int64_t* row = &cg.gram[a * m];
          for (std::uint32_t b : hits) ++row[b];
        }
      },
      cap);
  cg.lambda = cg.gram[0];
  for (std::size_t b = 0; b < m; ++b)
    if (graph.adjacent(0, b)) {
      cg.mu = cg.gram[b];
      break;
    }
  cg.pattern_fit = true;
  for (std::size_t a = 0; a < m && cg.pattern_fit; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::int64_t want = a == b ? cg.lambda : (graph.adjacent(a, b) ? cg.mu : 0);
      if (cg.gram[a * m + b] != want) {
        cg.pattern_fit = false;
        break;
      }
    }
  cg.swap_entry_zero = cg.gram[graph.index(0, 1) * m + graph.index(1, 0)] == 0;
  cg.pairs_bound = pairs && pairs->annihilated && pairs->least_bound_holds;
  cg.positive_definite = cg.pattern_fit && cg.pairs_bound && cg.mu >= 0 && cg.least_bound() > 0;
  return cg;
}

std::optional<Permutation> element_with_cycle_type(const PermutationGroup& group, const std::vector<std::size_t>& type,
                                                   std::mt19937_64& rng, std::size_t tries) {
  for (std::size_t t = 0; t < tries; ++t) {
    Permutation g = group.random_element(rng);
    if (g.cycle_type() == type) return g;
  }
  return std::nullopt;
}

std::optional<Permutation> unique_fixed_point_element(const PermutationGroup& group, Point x) {
  const PermutationGroup stab = point_stabilizer(group, x);
  std::optional<Permutation> found;
  for_each_element(stab, [&](std::uint64_t, std::span<const Point> pi) {
    if (!found && fixed_point_count(pi) == 1) found = Permutation::unchecked({pi.begin(), pi.end()});
  });
  return found;
}

bool standard_projection_check(const ElementTable& elements, const ConjugacyClassTable& classes,
                               const CharacterTable& table, Point i, Point j, std::uint64_t cap) {
  const std::uint64_t order = elements.size();
  if (order > cap) throw CapExceeded("projection check limited to groups of order " + std::to_string(cap));
  const std::size_t n = elements.degree();
  const Character& std_char = table[table.standard_index()];
  std::vector<std::int64_t> chi(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto v = table.field().as_integer(std_char.values[c]);
    if (!v) return false;
    chi[c] = *v;
  }
  // u = n v_{i,j} - 1; E_std u = u  <=>  chi(1) sum_sigma chi(pi^-1 sigma) u_sigma = |G| u_pi.
  std::vector<std::int64_t> u(order);
  std::int64_t support = 0;
  for (std::uint64_t r = 0; r < order; ++r) {
    const bool hit = elements[r][i] == j;
    support += hit;
    u[r] = (hit ? static_cast<std::int64_t>(n) : 0) - 1;
  }
  // E_triv v = (sum v / |G|) 1 = (1/n) 1.
  if (support * static_cast<std::int64_t>(n) != static_cast<std::int64_t>(order)) return false;
  std::vector<Point> inv(n), prod(n);
  for (std::uint64_t a = 0; a < order; ++a) {
    raw::invert(elements[a], inv);
    std::int64_t sum = 0;
    for (std::uint64_t s = 0; s < order; ++s) {
      raw::compose(inv, elements[s], prod);
      sum += chi[classes.class_of_rank(elements.rank(prod))] * u[s];
    }
    if (static_cast<std::int64_t>(std_char.degree) * sum != static_cast<std::int64_t>(order) * u[a]) return false;
  }
  return true;
}

IdentityBlock b_identity_submatrix(const PermutationGroup& group) {
  const std::size_t n = group.degree();
  IdentityBlock block;
  block.identity = true;
  for (std::size_t x = 0; x < n; ++x) {
    auto u = unique_fixed_point_element(group, static_cast<Point>(x));
    if (!u || u->is_identity()) {
      block.identity = false;
      continue;
    }
    // Diagonal columns of the row of u are exactly its fixed points.
    for (std::size_t y = 0; y < n; ++y)
      if (((*u)(static_cast<Point>(y)) == y) != (y == x)) block.identity = false;
    block.rows.push_back(std::move(*u));
  }
  return block;
}

}  // namespace ekr
