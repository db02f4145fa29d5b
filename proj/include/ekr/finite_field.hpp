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
#include <utility>
#include <vector>

namespace ekr {

/// GF(q) for q = p^k <= 32, with elements encoded as integers 0..q-1 whose
/// base-p digits are polynomial coefficients (digit i is the coefficient of x^i).
///
/// Extension fields use a fixed Conway polynomial, so x is a primitive element;
/// prime fields use their least primitive root.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t extension_degree() const noexcept { return k_; }
  /// Coefficients of the defining polynomial, ascending, monic; {0, 1} for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::uint32_t primitive_element() const noexcept { return primitive_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  /// Throws std::domain_error for zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// a -> a^p.
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t primitive_ = 0;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// Polynomial-basis multiplication done directly on coefficient digits, used
/// to cross-check the tables.
std::uint32_t reference_multiply(const FiniteField& field, std::uint32_t a, std::uint32_t b);

/// Decomposes q into p^k; throws std::invalid_argument if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

}  // namespace ekr
