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

#include "ekr/classes.hpp"

#include <numeric>
#include <string>

namespace ekr {
namespace {

// y = g x g^-1, using y(g(i)) = g(x(i)).
inline void conjugate_into(std::span<const Point> x, std::span<const Point> g, std::span<Point> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[g[i]] = g[x[i]];
}

constexpr std::uint32_t kUnassigned = 0xffffffffu;

}  // namespace

ConjugacyClassTable::ConjugacyClassTable(const ElementTable& elements)
    : group_(elements.group()), group_order_(elements.size()) {
  const std::size_t n = elements.degree();
  const std::uint64_t order = elements.size();
  if (order >= kUnassigned) throw CapExceeded("group too large for a full class table");
  class_of_.assign(order, kUnassigned);

  std::vector<Point> conj(n), scratch(2 * n);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t r = 0; r < order; ++r) {
    if (class_of_[r] != kUnassigned) continue;
    const auto index = static_cast<std::uint32_t>(classes_.size());
    class_of_[r] = index;
    queue.assign(1, r);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto x = elements[queue[head]];
      for (const Permutation& g : group_.generators()) {
        conjugate_into(x, g.images(), conj);
        std::uint64_t s = *group_.rank(conj, scratch);
        if (class_of_[s] == kUnassigned) {
          class_of_[s] = index;
          queue.push_back(s);
        }
      }
    }
    ConjugacyClass c;
    c.representative = elements.element(r);
    c.size = queue.size();
    c.element_order = c.representative.order();
    c.fixed_points = fixed_point_count(c.representative);
    c.cycle_type = c.representative.cycle_type();
    classes_.push_back(std::move(c));
    exponent_ = std::lcm(exponent_, classes_.back().element_order);
  }

  members_.resize(classes_.size());
  for (std::uint64_t r = 0; r < order; ++r) members_[class_of_[r]].push_back(static_cast<std::uint32_t>(r));

  power_.resize(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const Permutation& rep = classes_[i].representative;
    Permutation acc = Permutation::identity(n);
    for (std::uint64_t s = 0; s < classes_[i].element_order; ++s) {
      power_[i].push_back(class_of_[*group_.rank(acc.images(), scratch)]);
      acc = compose(rep, acc);
    }
  }
  inverse_.resize(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) inverse_[i] = power_class(i, classes_[i].element_order - 1);
}

std::size_t ConjugacyClassTable::index_of(const Permutation& g) const {
  auto r = group_.rank(g.images());
  if (!r) throw NotAMember("permutation " + g.to_cycles() + " is not in the group");
  return class_of_[*r];
}

ConjugacyClassTable conjugacy_classes(const ElementTable& elements) { return ConjugacyClassTable(elements); }

std::uint64_t conjugation_orbit(const PermutationGroup& group, const Permutation& rep,
                                const std::function<void(std::span<const Point>)>& visit,
                                std::uint64_t cap) {
  const std::size_t n = group.degree();
  std::vector<Point> scratch(2 * n), conj(n);
  auto start = group.rank(rep.images(), scratch);
  if (!start) throw NotAMember("class representative is not in the group");
  std::vector<bool> seen(group.order(), false);
  std::vector<std::uint64_t> queue{*start};
  seen[*start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Permutation x = group.unrank(queue[head]);
    visit(x.images());
    for (const Permutation& g : group.generators()) {
      conjugate_into(x.images(), g.images(), conj);
      std::uint64_t s = *group.rank(conj, scratch);
      if (seen[s]) continue;
      if (queue.size() >= cap)
        throw CapExceeded("conjugacy class exceeds the orbit cap " + std::to_string(cap));
      seen[s] = true;
      queue.push_back(s);
    }
  }
  return queue.size();
}

std::vector<Permutation> conjugation_orbit(const PermutationGroup& group, const Permutation& rep,
                                           std::uint64_t cap) {
  std::vector<Permutation> out;
  conjugation_orbit(
      group, rep,
      [&](std::span<const Point> x) {
        out.push_back(Permutation::unchecked(std::vector<Point>(x.begin(), x.end())));
      },
      cap);
  return out;
}

std::uint64_t centralizer_order(const ElementTable& elements, const Permutation& g) {
  const std::size_t n = elements.degree();
  std::vector<Point> gx(n), xg(n);
  std::uint64_t count = 0;
  for (std::uint64_t r = 0; r < elements.size(); ++r) {
    auto x = elements[r];
    raw::compose(g.images(), x, gx);
    raw::compose(x, g.images(), xg);
    count += gx == xg;
  }
  return count;
}

}  // namespace ekr
