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

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "ekr/exact_rank.hpp"
#include "ekr/module_rank.hpp"
#include "helpers.hpp"

using namespace ekr;
using boost::multiprecision::cpp_rational;

namespace {

// Plain Gaussian elimination over the rationals.
std::size_t rational_rank(const BinaryMatrix& m) {
  std::vector<std::vector<cpp_rational>> a(m.row_count(), std::vector<cpp_rational>(m.cols, 0));
  for (std::size_t i = 0; i < m.row_count(); ++i)
    for (auto c : m.rows[i]) a[i][c] = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      const cpp_rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng) {
  BinaryMatrix m;
  m.cols = cols;
  std::bernoulli_distribution one(density);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::uint32_t> row;
    for (std::uint32_t j = 0; j < cols; ++j)
      if (one(rng)) row.push_back(j);
    m.rows.push_back(row);
  }
  return m;
}

}  // namespace

TEST_CASE("ranks agree with rational elimination") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 12;
    BinaryMatrix m = random_matrix(rows, cols, 0.2 + 0.1 * (t % 5), rng);
    // Duplicate a column to force deficiency in some cases.
    if (t % 3 == 0 && cols > 1) {
      m.cols += 1;
      for (auto& row : m.rows)
        if (std::find(row.begin(), row.end(), 0u) != row.end()) row.push_back(static_cast<std::uint32_t>(cols));
    }
    const std::size_t expected = rational_rank(m);
    CHECK(exact_rank(m) == expected);
    CHECK(rank_mod(m, kRankPrime) == expected);
    CHECK(rank_mod(m, 1'000'000'007) == expected);
    const RankCertificate cert = rank_certificate(m);
    CHECK(cert.rank == expected);
    CHECK(cert.full() == (expected == m.cols));
    CHECK(cert.kernel.size() == (cert.full() ? 0 : m.cols - expected));
    CHECK(verify_certificate(m, cert));
    CHECK(cert.digest.size() == 16);
  }
}

TEST_CASE("tampered certificates fail verification") {
  const auto f20 = ekr::testing::load("F20");
  const BinaryMatrix m = build_m(f20->der);
  CHECK(m.row_count() == 4);
  CHECK(m.cols == 12);
  const RankCertificate cert = rank_certificate(m);
  CHECK(cert.rank == 4);
  CHECK(cert.mode == RankMode::kernel);
  REQUIRE(cert.kernel.size() == 8);
  CHECK(verify_certificate(m, cert));

  RankCertificate bad_rank = cert;
  bad_rank.rank = 5;
  CHECK_FALSE(verify_certificate(m, bad_rank));
  RankCertificate bad_kernel = cert;
  bad_kernel.kernel[0][0] += 1;
  CHECK_FALSE(verify_certificate(m, bad_kernel));
  RankCertificate bad_digest = cert;
  bad_digest.digest[0] = bad_digest.digest[0] == '0' ? '1' : '0';
  CHECK_FALSE(verify_certificate(m, bad_digest));
  BinaryMatrix other = m;
  other.rows.push_back({0, 1, 2});
  CHECK_FALSE(verify_certificate(other, cert));
}

TEST_CASE("full rank is certified modulo the Mersenne prime") {
  BinaryMatrix id;
  id.cols = 5;
  for (std::uint32_t i = 0; i < 5; ++i) id.rows.push_back({i});
  const auto cert = rank_certificate(id);
  CHECK(cert.full());
  CHECK(cert.mode == RankMode::full_rank_mod_p);
  CHECK(cert.prime == kRankPrime);
  CHECK(to_string(cert.mode) == "full-rank-mod-p");
  CHECK(rank_mod(id, kRankPrime, 3) == 3);
}

TEST_CASE("a 2-adic deficiency is not hidden by a small prime") {
  // Rows (1,1,0), (0,1,1), (1,0,1) have determinant 2: singular mod 2, full over Q.
  BinaryMatrix m;
  m.cols = 3;
  m.rows = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(rank_mod(m, 2) == 2);
  CHECK(exact_rank(m) == 3);
  CHECK(rank_certificate(m).full());
}
