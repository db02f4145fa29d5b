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
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ekr {

/// A 0/1 matrix stored as the sorted column indices of the ones in each row.
struct BinaryMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<std::uint32_t>> rows;
  std::size_t row_count() const noexcept { return rows.size(); }
};

using BigInt = boost::multiprecision::cpp_int;

enum class RankMode {
  full_rank_mod_p,   ///< rank over GF(p) equals the column count
  kernel,            ///< explicit integer kernel basis, verified by multiplication
  exact_elimination  ///< fraction-free elimination over the integers
};

std::string to_string(RankMode mode);

struct RankCertificate {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  RankMode mode = RankMode::full_rank_mod_p;
  std::uint64_t prime = 0;
  /// Integer kernel basis; vector f is 1 at the f-th free column and 0 at the others.
  std::vector<std::vector<BigInt>> kernel;
  std::string digest;

  bool full() const noexcept { return rank == cols; }
};

/// 2^61 - 1.
inline constexpr std::uint64_t kRankPrime = (std::uint64_t{1} << 61) - 1;

/// Rank over GF(p) by streaming elimination, stopping once `stop_at` is reached.
std::size_t rank_mod(const BinaryMatrix& m, std::uint64_t p, std::size_t stop_at = SIZE_MAX);

/// Exact rank over the rationals by fraction-free elimination.
std::size_t exact_rank(const BinaryMatrix& m);

/// Rank over the rationals with a certificate: full rank is certified modulo
/// kRankPrime; a deficiency by a kernel basis recovered through rational
/// reconstruction, falling back to exact elimination.
RankCertificate rank_certificate(const BinaryMatrix& m);

/// Re-checks a certificate against the matrix without reusing its computation.
bool verify_certificate(const BinaryMatrix& m, const RankCertificate& cert);

}  // namespace ekr
