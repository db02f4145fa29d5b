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

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ekr {

/// Element of Z[zeta_e] (or Q(zeta_e) with a common denominator) written as a
/// sparse combination of powers zeta_e^t, 0 <= t < e.
///
/// The representation is not unique; equality is decided through
/// CyclotomicField::canonical. Coefficient arithmetic is checked for 64-bit
/// overflow.
class Cyclotomic {
 public:
  using Term = std::pair<std::uint32_t, std::int64_t>;

  Cyclotomic() = default;
  Cyclotomic(std::uint32_t e, std::int64_t integer);
  static Cyclotomic root_power(std::uint32_t e, std::uint64_t t, std::int64_t coefficient = 1);

  std::uint32_t conductor() const noexcept { return e_; }
  /// Sorted by exponent, no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero_raw() const noexcept { return terms_.empty(); }

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(std::int64_t scalar);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, std::int64_t s) { return a *= s; }

  /// Complex conjugate: zeta^t -> zeta^-t.
  Cyclotomic conj() const;
  /// Galois image zeta -> zeta^k for k coprime to e.
  Cyclotomic galois(std::uint64_t k) const;

  std::complex<long double> value() const;
  /// Integer combination encoded as "c0,c1,...,c_{e-1}".
  std::string to_coefficients() const;
  static Cyclotomic from_coefficients(std::uint32_t e, const std::string& text);

 private:
  void normalize();

  std::uint32_t e_ = 1;
  std::vector<Term> terms_;
};

/// Canonical forms in Q(zeta_e): reduction modulo the cyclotomic polynomial Phi_e.
class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint32_t e);

  std::uint32_t conductor() const noexcept { return e_; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }
  /// Coefficients of Phi_e, ascending.
  const std::vector<std::int64_t>& phi() const noexcept { return phi_; }

  /// Unique coefficient vector of length degree() in the power basis 1, zeta, ...
  std::vector<std::int64_t> canonical(const Cyclotomic& a) const;
  bool equal(const Cyclotomic& a, const Cyclotomic& b) const;
  bool is_zero(const Cyclotomic& a) const;
  /// The rational integer a represents, if it is one.
  std::optional<std::int64_t> as_integer(const Cyclotomic& a) const;

 private:
  std::uint32_t e_;
  std::vector<std::int64_t> phi_;
  /// zeta^t reduced, for every t < e.
  std::vector<std::vector<std::int64_t>> reduced_power_;
};

/// Integer coefficients of Phi_m, ascending.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m);

}  // namespace ekr
