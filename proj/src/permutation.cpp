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

#include "ekr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ekr {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > 65535) throw std::invalid_argument("permutation degree exceeds 65535");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("image table is not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point out of range", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected a point", pos);
      if (value < 1 || value > degree)
        throw ParseError("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree), start);
      Point p = static_cast<Point>(value - 1);
      if (used[p]) throw ParseError("point " + std::to_string(value) + " repeated", start);
      used[p] = true;
      cycle.push_back(p);
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", pos);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<Point> out(q.degree());
  raw::compose(p.images(), q.images(), out);
  return Permutation::unchecked(std::move(out));
}

Permutation invert(const Permutation& p) {
  std::vector<Point> out(p.degree());
  raw::invert(p.images(), out);
  return Permutation::unchecked(std::move(out));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g, x), invert(g));
}

std::vector<Point> fixed_points(const Permutation& p) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p[i] == i) out.push_back(static_cast<Point>(i));
  return out;
}

std::size_t fixed_point_count(std::span<const Point> images) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images.size(); ++i) count += images[i] == i;
  return count;
}

}  // namespace ekr
