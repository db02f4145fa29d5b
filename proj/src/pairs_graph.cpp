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

#include "ekr/pairs_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {
namespace {

using Dense = std::vector<std::int64_t>;

Dense multiply(const Dense& a, const Dense& b, std::size_t m) {
  Dense c(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const std::int64_t x = a[i * m + k];
      if (x == 0) continue;
      const std::int64_t* row = &b[k * m];
      std::int64_t* out = &c[i * m];
      for (std::size_t j = 0; j < m; ++j) out[j] += x * row[j];
    }
  return c;
}

// A^2 - (s + t) A + s t I.
Dense quadratic(const Dense& a, const Dense& a2, std::size_t m, std::int64_t s, std::int64_t t) {
  Dense q(m * m);
  for (std::size_t i = 0; i < m * m; ++i) q[i] = a2[i] - (s + t) * a[i];
  for (std::size_t i = 0; i < m; ++i) q[i * m + i] += s * t;
  return q;
}

Dense linear(const Dense& a, std::size_t m, std::int64_t s) {
  Dense q = a;
  for (std::size_t i = 0; i < m; ++i) q[i * m + i] -= s;
  return q;
}

bool is_zero(const Dense& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

// prod over `roots` of (A - theta I).
Dense product(const Dense& a, std::size_t m, const std::vector<std::int64_t>& roots) {
  Dense p = linear(a, m, roots.front());
  for (std::size_t r = 1; r < roots.size(); ++r) p = multiply(p, linear(a, m, roots[r]), m);
  return p;
}

}  // namespace

PairsGraph::PairsGraph(std::size_t n) : n_(n) {
  if (n < 4) throw std::invalid_argument("pairs graph needs n >= 4");
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (i != j) vertices_.emplace_back(static_cast<Point>(i), static_cast<Point>(j));
  const std::size_t m = vertices_.size();
  adjacency_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto [i, j] = vertices_[a];
      const auto [k, l] = vertices_[b];
      const bool disjoint = i != k && i != l && j != k && j != l;
      adjacency_[a * m + b] = disjoint || (i == l && j != k) || (i != l && j == k);
    }
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t deg = 0;
    for (std::size_t b = 0; b < m; ++b) deg += adjacency_[a * m + b];
    if (a == 0) valency_ = deg;
    regular_ = regular_ && deg == valency_;
  }
}

PairsSpectrumCheck least_eigenvalue_check(const PairsGraph& graph) {
  const auto n = static_cast<std::int64_t>(graph.n());
  const std::size_t m = graph.size();
  PairsSpectrumCheck check;
  check.candidates = {(n - 2) * (n - 3), 2, 0, -(n - 3)};
  std::sort(check.candidates.begin(), check.candidates.end(), std::greater<>());
  check.candidates.erase(std::unique(check.candidates.begin(), check.candidates.end()), check.candidates.end());

  Dense a(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) a[x * m + y] = graph.adjacent(x, y);
  const auto& c = check.candidates;
  Dense full;
  if (c.size() == 4) {
    const Dense a2 = multiply(a, a, m);
    full = multiply(quadratic(a, a2, m, c[0], c[1]), quadratic(a, a2, m, c[2], c[3]), m);
  } else {
    full = product(a, m, c);
  }
  check.annihilated = is_zero(full);
  if (!check.annihilated) return check;
  // The smallest candidate is an eigenvalue iff dropping it breaks annihilation.
  std::vector<std::int64_t> roots = c;
  check.least = roots.front();
  while (roots.size() > 1) {
    const std::int64_t smallest = roots.back();
    roots.pop_back();
    if (!is_zero(product(a, m, roots))) {
      check.least = smallest;
      break;
    }
  }
  check.least_bound_holds = check.least >= -(n - 3);
  return check;
}

}  // namespace ekr
