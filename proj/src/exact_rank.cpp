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

#include "ekr/exact_rank.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "ekr/digest.hpp"
#include "ekr/modular.hpp"

namespace ekr {
namespace {

using BigRational = boost::multiprecision::cpp_rational;

inline std::uint64_t mul61(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  const std::uint64_t s = static_cast<std::uint64_t>(z & kRankPrime) + static_cast<std::uint64_t>(z >> 61);
  return s >= kRankPrime ? s - kRankPrime : s;
}

struct GenericMul {
  std::uint64_t p;
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const { return mod::mul(a, b, p); }
};
struct MersenneMul {
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const { return mul61(a, b); }
};

// Row echelon basis over GF(p), grown one row at a time. Each stored row is
// zero at the pivots of the rows stored before it and has leading entry 1.
template <class Mul>
class ModEchelon {
 public:
  ModEchelon(std::size_t cols, std::uint64_t p, Mul mul) : cols_(cols), p_(p), mul_(mul), row_(cols) {}

  bool add(const std::vector<std::uint32_t>& ones) {
    std::fill(row_.begin(), row_.end(), 0);
    for (std::uint32_t c : ones) row_[c] = 1;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const std::uint64_t c = row_[pivots_[b]];
      if (c == 0) continue;
      const std::vector<std::uint64_t>& v = basis_[b];
      for (std::size_t j = pivots_[b]; j < cols_; ++j)
        if (v[j]) row_[j] = mod::sub(row_[j], mul_(c, v[j]), p_);
    }
    std::size_t lead = 0;
    while (lead < cols_ && row_[lead] == 0) ++lead;
    if (lead == cols_) return false;
    const std::uint64_t scale = mod::inv(row_[lead], p_);
    for (std::size_t j = lead; j < cols_; ++j) row_[j] = mul_(row_[j], scale);
    basis_.push_back(row_);
    pivots_.push_back(lead);
    return true;
  }

  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<std::vector<std::uint64_t>>& basis() const noexcept { return basis_; }

 private:
  std::size_t cols_;
  std::uint64_t p_;
  Mul mul_;
  std::vector<std::uint64_t> row_;
  std::vector<std::vector<std::uint64_t>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class Mul>
std::size_t streaming_rank(const BinaryMatrix& m, std::uint64_t p, Mul mul, std::size_t stop_at,
                           std::vector<std::vector<std::uint64_t>>* basis = nullptr) {
  ModEchelon<Mul> ech(m.cols, p, mul);
  const std::size_t limit = std::min(stop_at, m.cols);
  for (const auto& row : m.rows) {
    if (ech.rank() >= limit) break;
    ech.add(row);
  }
  if (basis) *basis = ech.basis();
  return ech.rank();
}

// Integer combination of rows with exact arithmetic; true iff M w = 0.
bool annihilates(const BinaryMatrix& m, const std::vector<BigInt>& w) {
  for (const auto& row : m.rows) {
    BigInt s = 0;
    for (std::uint32_t c : row) s += w[c];
    if (s != 0) return false;
  }
  return true;
}

std::vector<BigInt> to_integer_vector(const std::vector<BigRational>& v) {
  BigInt den = 1;
  for (const BigRational& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const BigRational& x : v) out.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
  return out;
}

// Kernel basis mod p lifted to Q by rational reconstruction, one vector per
// free column, or nullopt when some entry does not reconstruct.
std::optional<std::vector<std::vector<BigInt>>> reconstructed_kernel(const std::vector<std::vector<std::uint64_t>>& basis,
                                                                     std::size_t cols) {
  mod::Matrix a(basis.size(), cols);
  for (std::size_t i = 0; i < basis.size(); ++i) std::copy(basis[i].begin(), basis[i].end(), a.data.begin() + i * cols);
  const std::vector<std::size_t> pivots = mod::rref(a, kRankPrime);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> w(cols, 0);
    w[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      auto q = mod::rational_reconstruct(mod::sub(0, a(i, f), kRankPrime), kRankPrime);
      if (!q) return std::nullopt;
      w[pivots[i]] = BigRational(q->first, q->second);
    }
    out.push_back(to_integer_vector(w));
  }
  return out;
}

struct ExactResult {
  std::size_t rank = 0;
  std::vector<std::vector<BigInt>> kernel;
};

ExactResult exact_elimination(const BinaryMatrix& m, bool with_kernel) {
  const std::size_t cols = m.cols;
  std::vector<std::vector<BigInt>> basis;
  std::vector<std::size_t> pivots;
  std::vector<BigInt> row(cols);
  for (const auto& ones : m.rows) {
    if (basis.size() == cols) break;
    std::fill(row.begin(), row.end(), 0);
    for (std::uint32_t c : ones) row[c] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const BigInt c = row[pivots[b]];
      if (c == 0) continue;
      const BigInt lead = basis[b][pivots[b]];
      BigInt g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        row[j] = lead * row[j] - c * basis[b][j];
        if (row[j] != 0) g = boost::multiprecision::gcd(g, row[j]);
      }
      if (g > 1)
        for (BigInt& x : row) x /= g;
    }
    std::size_t lead = 0;
    while (lead < cols && row[lead] == 0) ++lead;
    if (lead == cols) continue;
    basis.push_back(row);
    pivots.push_back(lead);
  }
  ExactResult out;
  out.rank = basis.size();
  if (!with_kernel || out.rank == cols) return out;
  // Gauss-Jordan over Q on the independent rows.
  std::vector<std::vector<BigRational>> r(basis.size(), std::vector<BigRational>(cols));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r[i][j] = BigRational(basis[i][j]);
  std::vector<std::size_t> piv;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < r.size(); ++c) {
    std::size_t s = top;
    while (s < r.size() && r[s][c] == 0) ++s;
    if (s == r.size()) continue;
    std::swap(r[s], r[top]);
    const BigRational inv = 1 / r[top][c];
    for (BigRational& x : r[top]) x *= inv;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i == top || r[i][c] == 0) continue;
      const BigRational f = r[i][c];
      for (std::size_t j = 0; j < cols; ++j) r[i][j] -= f * r[top][j];
    }
    piv.push_back(c);
    ++top;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> w(cols, 0);
    w[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) w[piv[i]] = -r[i][f];
    out.kernel.push_back(to_integer_vector(w));
  }
  return out;
}

std::string digest_of(const RankCertificate& cert) {
  std::ostringstream s;
  s << cert.rows << ' ' << cert.cols << ' ' << cert.rank << ' ' << to_string(cert.mode) << ' ' << cert.prime;
  for (const auto& v : cert.kernel) {
    s << ';';
    for (const BigInt& x : v) s << x << ',';
  }
  return digest_hex(s.str());
}

}  // namespace

std::string to_string(RankMode mode) {
  switch (mode) {
    case RankMode::full_rank_mod_p: return "full-rank-mod-p";
    case RankMode::kernel: return "kernel";
    case RankMode::exact_elimination: return "exact-elimination";
  }
  return "?";
}

std::size_t rank_mod(const BinaryMatrix& m, std::uint64_t p, std::size_t stop_at) {
  if (p == kRankPrime) return streaming_rank(m, p, MersenneMul{}, stop_at);
  return streaming_rank(m, p, GenericMul{p}, stop_at);
}

std::size_t exact_rank(const BinaryMatrix& m) { return exact_elimination(m, false).rank; }

RankCertificate rank_certificate(const BinaryMatrix& m) {
  RankCertificate cert;
  cert.rows = m.row_count();
  cert.cols = m.cols;
  cert.prime = kRankPrime;
  std::vector<std::vector<std::uint64_t>> basis;
  cert.rank = streaming_rank(m, kRankPrime, MersenneMul{}, SIZE_MAX, &basis);
  cert.mode = RankMode::full_rank_mod_p;
  if (cert.rank < cert.cols) {
    // The rank mod p is a lower bound; an exact kernel of the complementary
    // dimension makes it exact.
    auto kernel = reconstructed_kernel(basis, m.cols);
    bool ok = kernel.has_value();
    if (ok)
      for (const auto& w : *kernel) ok = ok && annihilates(m, w);
    if (ok) {
      cert.mode = RankMode::kernel;
      cert.kernel = std::move(*kernel);
    } else {
      ExactResult exact = exact_elimination(m, true);
      cert.mode = RankMode::exact_elimination;
      cert.prime = 0;
      cert.rank = exact.rank;
      cert.kernel = std::move(exact.kernel);
    }
  }
  cert.digest = digest_of(cert);
  return cert;
}

bool verify_certificate(const BinaryMatrix& m, const RankCertificate& cert) {
  if (cert.rows != m.row_count() || cert.cols != m.cols || cert.rank > cert.cols) return false;
  if (cert.digest != digest_of(cert)) return false;
  if (cert.mode == RankMode::full_rank_mod_p)
    return cert.rank == cert.cols && cert.prime != 0 && mod::is_prime(cert.prime) &&
           streaming_rank(m, cert.prime, GenericMul{cert.prime}, SIZE_MAX) == cert.cols;
  // Lower bound from a modular rank, upper bound from independent kernel vectors.
  if (cert.kernel.size() != cert.cols - cert.rank) return false;
  for (const auto& w : cert.kernel)
    if (w.size() != cert.cols || !annihilates(m, w)) return false;
  mod::Matrix k(cert.kernel.size(), cert.cols);
  for (std::size_t i = 0; i < cert.kernel.size(); ++i)
    for (std::size_t j = 0; j < cert.cols; ++j) {
      BigInt r = cert.kernel[i][j] % BigInt(kRankPrime);
      if (r < 0) r += kRankPrime;
      k(i, j) = static_cast<std::uint64_t>(r);
    }
  if (mod::rank(k, kRankPrime) != cert.kernel.size()) return false;
  const std::size_t lower = cert.mode == RankMode::exact_elimination
                                ? exact_rank(m)
                                : streaming_rank(m, kRankPrime, GenericMul{kRankPrime}, SIZE_MAX);
  return lower == cert.rank;
}

}  // namespace ekr
