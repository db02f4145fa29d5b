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
#include <optional>
#include <vector>

namespace ekr::mod {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p || s < a ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }
/// Reduces a signed integer into [0, p).
inline std::uint64_t from_signed(std::int64_t a, std::uint64_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Smallest generator of the multiplicative group mod the prime p.
std::uint64_t primitive_root(std::uint64_t p);
/// Smallest prime p with p % m == 1 and p > lower_bound.
std::uint64_t prime_congruent_one(std::uint64_t m, std::uint64_t lower_bound);

/// Row-major dense matrix over the integers mod p.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// In-place reduced row echelon form; returns the pivot column of each nonzero row.
/// Rows are swapped, so the top rows span the row space afterwards.
std::vector<std::size_t> rref(Matrix& a, std::uint64_t p);

/// Rank modulo p. Stops early once `stop_at` pivots are found.
std::size_t rank(Matrix a, std::uint64_t p, std::size_t stop_at = SIZE_MAX);

/// Basis of the right kernel {x : A x = 0}, one vector per free column.
std::vector<std::vector<std::uint64_t>> kernel(Matrix a, std::uint64_t p);

/// Characteristic polynomial det(xI - A) of a square matrix, coefficients
/// ascending with a leading 1.
std::vector<std::uint64_t> charpoly(Matrix a, std::uint64_t p);

std::uint64_t eval(const std::vector<std::uint64_t>& poly, std::uint64_t x, std::uint64_t p);

/// Recovers a/b with |a|, b <= sqrt(p/2) from a residue, or nullopt.
std::optional<std::pair<std::int64_t, std::int64_t>> rational_reconstruct(std::uint64_t r, std::uint64_t p);

}  // namespace ekr::mod
