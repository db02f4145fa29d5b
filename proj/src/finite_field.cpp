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

#include "ekr/finite_field.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

#include "ekr/modular.hpp"

namespace ekr {
namespace {

// Conway polynomials, ascending coefficients without the leading 1.
std::vector<std::uint32_t> conway_tail(std::uint32_t q) {
  switch (q) {
    case 4: return {1, 1};         // x^2 + x + 1
    case 8: return {1, 1, 0};      // x^3 + x + 1
    case 9: return {2, 2};         // x^2 + 2x + 2
    case 16: return {1, 1, 0, 0};  // x^4 + x + 1
    case 25: return {2, 4};        // x^2 + 4x + 2
    case 27: return {1, 2, 0};     // x^3 + 2x + 1
    case 32: return {1, 0, 1, 0, 0};  // x^5 + x^2 + 1
    default: throw std::invalid_argument("no defining polynomial for GF(" + std::to_string(q) + ")");
  }
}

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> out(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = a % p;
    a /= p;
  }
  return out;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return {p, k};
}

std::uint32_t reference_multiply(const FiniteField& field, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = field.characteristic(), k = field.extension_degree();
  if (k == 1) return a * b % p;
  auto da = digits(a, p, k), db = digits(b, p, k);
  std::vector<std::uint32_t> prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = field.modulus();
  for (std::size_t d = prod.size(); d-- > k;) {
    std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
  }
  prod.resize(k);
  return from_digits(prod, p);
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q > 32) throw std::invalid_argument("fields are supported up to order 32");
  std::tie(p_, k_) = prime_power(q);
  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = conway_tail(q);
    modulus_.push_back(1);
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto da = digits(a, p_, k_);
    std::vector<std::uint32_t> dn(k_);
    for (std::uint32_t i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = from_digits(dn, p_);
    for (std::uint32_t b = 0; b < q; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<std::uint32_t> ds(k_);
      for (std::uint32_t i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = from_digits(ds, p_);
      mul_[a * q + b] = reference_multiply(*this, a, b);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
  primitive_ = k_ == 1 ? static_cast<std::uint32_t>(mod::primitive_root(p_)) : p_;  // p_ encodes x
  if (q == 2) primitive_ = 1;
  std::uint32_t x = primitive_, ord = 1;
  while (x != 1) {
    x = mul(x, primitive_);
    ++ord;
  }
  if (ord != q - 1) throw std::logic_error("defining polynomial is not primitive");
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace ekr
