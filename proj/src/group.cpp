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

#include "ekr/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace ekr {
namespace {

void rebuild_orbit(ChainLevel& level, std::size_t n) {
  level.orbit.assign(1, level.base);
  level.position.assign(n, -1);
  level.position[level.base] = 0;
  level.transversal.assign(1, Permutation::identity(n));
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    Point x = level.orbit[idx];
    for (const Permutation& s : level.generators) {
      Point y = s(x);
      if (level.position[y] >= 0) continue;
      level.position[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(compose(s, level.transversal[idx]));
    }
  }
  level.inverse_transversal.clear();
  level.inverse_transversal.reserve(level.transversal.size());
  for (const Permutation& t : level.transversal) level.inverse_transversal.push_back(invert(t));
}

// Sifts h through levels [from, n). Returns the residue and the level where
// sifting stopped, or chain.size() when it passed every level.
std::pair<Permutation, std::size_t> strip(const std::vector<ChainLevel>& chain, Permutation h,
                                          std::size_t from) {
  for (std::size_t l = from; l < chain.size(); ++l) {
    const ChainLevel& level = chain[l];
    std::int32_t k = level.position[h(level.base)];
    if (k < 0) return {std::move(h), l};
    if (k > 0) h = compose(level.inverse_transversal[k], h);
  }
  return {std::move(h), chain.size()};
}

}  // namespace

PermutationGroup build_group(const std::vector<Permutation>& generators,
                             std::span<const Point> base_prefix) {
  if (generators.empty()) throw std::invalid_argument("build_group: no generators");
  const std::size_t n = generators.front().degree();
  if (n == 0) throw std::invalid_argument("build_group: degree 0");
  for (const Permutation& g : generators)
    if (g.degree() != n) throw DegreeMismatch("build_group: generators of different degree");

  std::vector<Point> base;
  std::vector<bool> in_base(n, false);
  for (Point b : base_prefix) {
    if (b >= n) throw std::invalid_argument("build_group: base point out of range");
    if (in_base[b]) throw std::invalid_argument("build_group: repeated base point");
    in_base[b] = true;
    base.push_back(b);
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!in_base[x]) base.push_back(static_cast<Point>(x));

  PermutationGroup group;
  group.degree_ = n;
  group.generators_ = generators;
  std::vector<ChainLevel>& chain = group.chain_;
  chain.resize(n);
  for (std::size_t l = 0; l < n; ++l) chain[l].base = base[l];

  for (const Permutation& g : generators) {
    if (g.is_identity()) continue;
    for (std::size_t l = 0; l < n; ++l) {
      chain[l].generators.push_back(g);
      if (g(base[l]) != base[l]) break;
    }
  }
  for (ChainLevel& level : chain) rebuild_orbit(level, n);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(n) - 1;
  while (i >= 0) {
    ChainLevel& level = chain[static_cast<std::size_t>(i)];
    bool restart = false;
    for (std::size_t idx = 0; idx < level.orbit.size() && !restart; ++idx) {
      for (std::size_t s = 0; s < level.generators.size(); ++s) {
        const Permutation& gen = level.generators[s];
        Point image = gen(level.orbit[idx]);
        Permutation schreier =
            compose(level.inverse_transversal[level.position[image]], compose(gen, level.transversal[idx]));
        if (schreier.is_identity()) continue;
        auto [residue, stop] = strip(chain, std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (stop == n) continue;
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          chain[l].generators.push_back(residue);
          rebuild_orbit(chain[l], n);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }

  for (std::size_t l = 0; l < n; ++l)
    if (chain[l].orbit.size() > 1) group.active_.push_back(l);
  group.stride_.assign(group.active_.size(), 1);
  unsigned __int128 order = 1;
  for (std::size_t a = group.active_.size(); a-- > 0;) {
    group.stride_[a] = static_cast<std::uint64_t>(order);
    order *= chain[group.active_[a]].orbit.size();
    if (order > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("build_group: group order exceeds 64 bits");
  }
  group.order_ = static_cast<std::uint64_t>(order);
  return group;
}

std::vector<Point> PermutationGroup::base() const {
  std::vector<Point> out;
  out.reserve(chain_.size());
  for (const ChainLevel& level : chain_) out.push_back(level.base);
  return out;
}

std::optional<std::uint64_t> PermutationGroup::rank(std::span<const Point> g,
                                                    std::span<Point> scratch) const {
  if (g.size() != degree_) throw DegreeMismatch("rank: wrong degree");
  std::span<Point> h = scratch.first(degree_);
  std::span<Point> tmp = scratch.subspan(degree_, degree_);
  std::copy(g.begin(), g.end(), h.begin());
  std::uint64_t r = 0;
  for (std::size_t a = 0; a < active_.size(); ++a) {
    const ChainLevel& level = chain_[active_[a]];
    std::int32_t k = level.position[h[level.base]];
    if (k < 0) return std::nullopt;
    if (k == 0) continue;
    r += static_cast<std::uint64_t>(k) * stride_[a];
    raw::compose(level.inverse_transversal[k].images(), h, tmp);
    std::copy(tmp.begin(), tmp.end(), h.begin());
  }
  for (std::size_t x = 0; x < degree_; ++x)
    if (h[x] != x) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> PermutationGroup::rank(std::span<const Point> g) const {
  std::vector<Point> scratch(2 * degree_);
  return rank(g, scratch);
}

bool PermutationGroup::contains(const Permutation& g) const {
  return g.degree() == degree_ && rank(g.images()).has_value();
}

std::uint64_t PermutationGroup::rank_of(const Permutation& g) const {
  auto r = rank(g.images());
  if (!r) throw NotAMember("permutation " + g.to_cycles() + " is not in the group");
  return *r;
}

Permutation PermutationGroup::unrank(std::uint64_t r) const {
  if (r >= order_) throw std::out_of_range("unrank: rank " + std::to_string(r) + " out of range");
  std::vector<Point> acc(degree_), tmp(degree_);
  std::iota(acc.begin(), acc.end(), Point{0});
  for (std::size_t a = 0; a < active_.size(); ++a) {
    std::uint64_t digit = r / stride_[a];
    r %= stride_[a];
    if (digit == 0) continue;
    raw::compose(acc, chain_[active_[a]].transversal[digit].images(), tmp);
    acc.swap(tmp);
  }
  return Permutation::unchecked(std::move(acc));
}

Permutation PermutationGroup::random_element(std::mt19937_64& rng) const {
  return unrank(std::uniform_int_distribution<std::uint64_t>(0, order_ - 1)(rng));
}

void for_each_element(const PermutationGroup& group,
                      const std::function<void(std::uint64_t, std::span<const Point>)>& visit) {
  const std::size_t n = group.degree();
  std::vector<std::size_t> active;
  for (std::size_t l = 0; l < group.chain().size(); ++l)
    if (group.chain()[l].orbit.size() > 1) active.push_back(l);
  const std::size_t depth = active.size();
  // prefix[a] holds u_0 * ... * u_{a-1}.
  std::vector<std::vector<Point>> prefix(depth + 1, std::vector<Point>(n));
  std::iota(prefix[0].begin(), prefix[0].end(), Point{0});
  std::vector<std::size_t> digit(depth, 0);
  for (std::size_t a = 0; a < depth; ++a) prefix[a + 1] = prefix[a];

  std::uint64_t r = 0;
  while (true) {
    visit(r++, prefix[depth]);
    std::size_t a = depth;
    while (a > 0) {
      --a;
      const ChainLevel& level = group.chain()[active[a]];
      if (++digit[a] < level.orbit.size()) break;
      digit[a] = 0;
      if (a == 0) return;
    }
    if (depth == 0) return;
    for (std::size_t b = a; b < depth; ++b)
      raw::compose(prefix[b], group.chain()[active[b]].transversal[digit[b]].images(), prefix[b + 1]);
  }
}

ElementTable::ElementTable(const PermutationGroup& group, std::uint64_t cap)
    : group_(group), degree_(group.degree()), size_(group.order()) {
  if (size_ > cap)
    throw CapExceeded("group of order " + std::to_string(size_) + " exceeds the enumeration cap " +
                      std::to_string(cap));
  data_.resize(size_ * degree_);
  for_each_element(group_, [&](std::uint64_t r, std::span<const Point> g) {
    std::copy(g.begin(), g.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * degree_));
  });
}

Permutation ElementTable::element(std::uint64_t r) const {
  auto s = (*this)[r];
  return Permutation::unchecked(std::vector<Point>(s.begin(), s.end()));
}

std::uint64_t ElementTable::rank(std::span<const Point> g) const {
  auto r = group_.rank(g);
  if (!r) throw NotAMember("permutation is not in the group");
  return *r;
}

ElementTable enumerate_elements(const PermutationGroup& group, std::uint64_t cap) {
  return ElementTable(group, cap);
}

std::vector<std::vector<Point>> orbits(const PermutationGroup& group) {
  const std::size_t n = group.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Point> orbit{static_cast<Point>(x)};
    seen[x] = true;
    for (std::size_t idx = 0; idx < orbit.size(); ++idx)
      for (const Permutation& g : group.generators()) {
        Point y = g(orbit[idx]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const PermutationGroup& group) { return orbits(group).size() == 1; }

std::size_t transitivity_degree(const PermutationGroup& group) {
  // The chain must use the base 0,1,...,n-1; rebuild if a prefix was used.
  const PermutationGroup* g = &group;
  PermutationGroup rebuilt;
  auto base = group.base();
  for (std::size_t i = 0; i < base.size(); ++i)
    if (base[i] != i) {
      rebuilt = build_group(group.generators());
      g = &rebuilt;
      break;
    }
  const std::size_t n = g->degree();
  std::size_t k = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (g->chain()[l].orbit.size() != n - l) break;
    ++k;
  }
  return k;
}

PermutationGroup point_stabilizer(const PermutationGroup& group, Point x) {
  const Point prefix[] = {x};
  PermutationGroup with_x = build_group(group.generators(), prefix);
  std::vector<Permutation> gens = with_x.chain().size() > 1 ? with_x.chain()[1].generators
                                                            : std::vector<Permutation>{};
  if (gens.empty()) gens.push_back(Permutation::identity(group.degree()));
  return build_group(gens);
}

std::vector<Permutation> coset_mapping(const PermutationGroup& group, Point from, Point to) {
  std::vector<Permutation> out;
  for_each_element(group, [&](std::uint64_t, std::span<const Point> g) {
    if (g[from] == to) out.push_back(Permutation::unchecked(std::vector<Point>(g.begin(), g.end())));
  });
  return out;
}

}  // namespace ekr
