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

#include "ekr/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ekr {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::int64_t c = num[k + dn];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k + i] = checked_add(num[k + i], -checked_mul(c, den[i]));
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m) {
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  static std::mutex mutex;
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  cache.emplace(m, poly);
  return poly;
}

Cyclotomic::Cyclotomic(std::uint32_t e, std::int64_t integer) : e_(e) {
  if (e == 0) throw std::invalid_argument("Cyclotomic: conductor must be positive");
  if (integer != 0) terms_.emplace_back(0, integer);
}

Cyclotomic Cyclotomic::root_power(std::uint32_t e, std::uint64_t t, std::int64_t coefficient) {
  Cyclotomic c(e, 0);
  if (coefficient != 0) c.terms_.emplace_back(static_cast<std::uint32_t>(t % e), coefficient);
  return c;
}

void Cyclotomic::normalize() {
  std::sort(terms_.begin(), terms_.end());
  std::vector<Term> merged;
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second = checked_add(merged.back().second, t.second);
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.e_ != e_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  if (other.e_ != e_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
  for (const Term& t : other.terms_) terms_.emplace_back(t.first, -t.second);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t scalar) {
  for (Term& t : terms_) t.second = checked_mul(t.second, scalar);
  normalize();
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.e_ != b.e_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
  Cyclotomic out(a.e_, 0);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ta, ca] : a.terms_)
    for (const auto& [tb, cb] : b.terms_)
      out.terms_.emplace_back(static_cast<std::uint32_t>((static_cast<std::uint64_t>(ta) + tb) % a.e_),
                              checked_mul(ca, cb));
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::conj() const { return galois(e_ - 1); }

Cyclotomic Cyclotomic::galois(std::uint64_t k) const {
  Cyclotomic out(e_, 0);
  for (const auto& [t, c] : terms_) out.terms_.emplace_back(static_cast<std::uint32_t>(t * k % e_), c);
  out.normalize();
  return out;
}

std::complex<long double> Cyclotomic::value() const {
  std::complex<long double> sum = 0;
  for (const auto& [t, c] : terms_) {
    long double angle = 2 * std::numbers::pi_v<long double> * t / e_;
    sum += static_cast<long double>(c) * std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyclotomic::to_coefficients() const {
  std::vector<std::int64_t> dense(e_, 0);
  for (const auto& [t, c] : terms_) dense[t] = c;
  std::string out;
  for (std::uint32_t t = 0; t < e_; ++t) {
    if (t) out += ',';
    out += std::to_string(dense[t]);
  }
  return out;
}

Cyclotomic Cyclotomic::from_coefficients(std::uint32_t e, const std::string& text) {
  Cyclotomic out(e, 0);
  std::stringstream in(text);
  std::string item;
  std::uint32_t t = 0;
  while (std::getline(in, item, ',')) {
    if (t >= e) throw std::invalid_argument("cyclotomic value has more than e coefficients");
    std::size_t used = 0;
    std::int64_t c = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed cyclotomic coefficient '" + item + "'");
    if (c != 0) out.terms_.emplace_back(t, c);
    ++t;
  }
  if (t != e) throw std::invalid_argument("cyclotomic value needs exactly e coefficients");
  return out;
}

CyclotomicField::CyclotomicField(std::uint32_t e) : e_(e), phi_(cyclotomic_polynomial(e)) {
  const std::size_t deg = degree();
  reduced_power_.assign(e, std::vector<std::int64_t>(deg, 0));
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = 1;
  for (std::uint32_t t = 0; t < e; ++t) {
    reduced_power_[t] = cur;
    // Multiply by zeta and fold zeta^deg = -sum phi_i zeta^i.
    std::int64_t top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) cur[i] = checked_add(cur[i], -checked_mul(top, phi_[i]));
  }
}

std::vector<std::int64_t> CyclotomicField::canonical(const Cyclotomic& a) const {
  if (a.conductor() != e_) throw std::invalid_argument("CyclotomicField: conductor mismatch");
  std::vector<std::int64_t> out(degree(), 0);
  for (const auto& [t, c] : a.terms()) {
    const auto& row = reduced_power_[t];
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) out[i] = checked_add(out[i], checked_mul(c, row[i]));
  }
  return out;
}

bool CyclotomicField::equal(const Cyclotomic& a, const Cyclotomic& b) const { return is_zero(a - b); }

bool CyclotomicField::is_zero(const Cyclotomic& a) const {
  auto c = canonical(a);
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<std::int64_t> CyclotomicField::as_integer(const Cyclotomic& a) const {
  auto c = canonical(a);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c[0];
}

}  // namespace ekr
