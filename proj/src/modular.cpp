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

#include "ekr/modular.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ekr::mod {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("mod::inv: zero has no inverse");
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : factors)
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

std::uint64_t prime_congruent_one(std::uint64_t m, std::uint64_t lower_bound) {
  std::uint64_t p = (lower_bound / m + 1) * m + 1;
  for (; p < (1ull << 62); p += m)
    if (is_prime(p)) return p;
  throw std::overflow_error("prime_congruent_one: search exceeded 62 bits");
}

std::vector<std::size_t> rref(Matrix& a, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t sel = row;
    while (sel < a.rows && a(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(sel, j), a(row, j));
    std::uint64_t scale = inv(a(row, col), p);
    for (std::size_t j = col; j < a.cols; ++j) a(row, j) = mul(a(row, j), scale, p);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row || a(i, col) == 0) continue;
      std::uint64_t f = a(i, col);
      for (std::size_t j = col; j < a.cols; ++j) a(i, j) = sub(a(i, j), mul(f, a(row, j), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix a, std::uint64_t p, std::size_t stop_at) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows && row < stop_at; ++col) {
    std::size_t sel = row;
    while (sel < a.rows && a(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row)
      for (std::size_t j = col; j < a.cols; ++j) std::swap(a(sel, j), a(row, j));
    std::uint64_t scale = inv(a(row, col), p);
    for (std::size_t j = col; j < a.cols; ++j) a(row, j) = mul(a(row, j), scale, p);
    for (std::size_t i = row + 1; i < a.rows; ++i) {
      if (a(i, col) == 0) continue;
      std::uint64_t f = a(i, col);
      for (std::size_t j = col; j < a.cols; ++j) a(i, j) = sub(a(i, j), mul(f, a(row, j), p), p);
    }
    ++row;
  }
  return row;
}

std::vector<std::vector<std::uint64_t>> kernel(Matrix a, std::uint64_t p) {
  auto pivots = rref(a, p);
  std::vector<bool> is_pivot(a.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(a.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub(0, a(r, free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint64_t> charpoly(Matrix a, std::uint64_t p) {
  const std::size_t n = a.rows;
  if (a.cols != n) throw std::invalid_argument("charpoly: matrix not square");
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t sel = m;
    while (sel < n && a(sel, m - 1) == 0) ++sel;
    if (sel == n) continue;
    if (sel != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, sel), a(i, m));
    }
    std::uint64_t pivot_inv = inv(a(m, m - 1), p);
    for (std::size_t i = m + 1; i < n; ++i) {
      std::uint64_t f = mul(a(i, m - 1), pivot_inv, p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a(i, j) = sub(a(i, j), mul(f, a(m, j), p), p);
      for (std::size_t r = 0; r < n; ++r) a(r, m) = add(a(r, m), mul(f, a(r, i), p), p);
    }
  }
  // Recurrence on leading principal submatrices of the Hessenberg matrix.
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> next(k + 1, 0);
    const auto& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = add(next[d + 1], prev[d], p);
      next[d] = sub(next[d], mul(a(k - 1, k - 1), prev[d], p), p);
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = mul(prod, a(k - i, k - i - 1), p);
      std::uint64_t coef = mul(prod, a(k - i - 1, k - 1), p);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < polys[k - i - 1].size(); ++d)
        next[d] = sub(next[d], mul(coef, polys[k - i - 1][d], p), p);
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

std::uint64_t eval(const std::vector<std::uint64_t>& poly, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t d = poly.size(); d-- > 0;) acc = add(mul(acc, x, p), poly[d], p);
  return acc;
}

std::optional<std::pair<std::int64_t, std::int64_t>> rational_reconstruct(std::uint64_t r, std::uint64_t p) {
  const auto bound = static_cast<__int128>(std::sqrt(static_cast<long double>(p) / 2));
  __int128 r0 = p, r1 = r % p, t0 = 0, t1 = 1;
  while (r1 > bound) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0) return std::nullopt;
  __int128 a = r1, b = t1;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  if (b > bound) return std::nullopt;
  return std::pair{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
}

}  // namespace ekr::mod
