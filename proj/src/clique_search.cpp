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

#include "ekr/clique_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace ekr {

DerangementIndex::DerangementIndex(const ElementTable& elements, const ConjugacyClassTable& classes)
    : elements(&elements), classes(&classes) {
  for (std::uint64_t r = 0; r < elements.size(); ++r)
    if (is_derangement(r)) ranks.push_back(static_cast<std::uint32_t>(r));
}

bool DerangementIndex::is_derangement(std::uint64_t rank) const {
  return (*classes)[classes->class_of_rank(rank)].fixed_points == 0;
}

bool verify_clique(const PermutationGroup& group, const std::vector<Permutation>& elements) {
  for (const Permutation& p : elements)
    if (!group.contains(p)) throw NotAMember("clique element " + p.to_cycles() + " is not in the group");
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      const auto x = elements[a].images(), y = elements[b].images();
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == y[i]) return false;
    }
  return true;
}

Clique canonical_clique(std::vector<Permutation> elements) {
  Clique c;
  if (elements.empty()) return c;
  const Permutation shift = invert(elements.front());
  for (Permutation& p : elements) p = p * shift;
  c.elements = std::move(elements);
  return c;
}

std::vector<Clique> shortcut_cliques(const DerangementIndex& der) {
  const ElementTable& el = *der.elements;
  const ConjugacyClassTable& cl = *der.classes;
  const std::size_t n = el.degree();
  std::vector<Clique> out;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const ConjugacyClass& c = cl[i];
    if (c.cycle_type == std::vector<std::size_t>{n}) {
      std::vector<Permutation> powers{Permutation::identity(n)};
      for (std::size_t s = 1; s < n; ++s) powers.push_back(powers.back() * c.representative);
      out.push_back(canonical_clique(std::move(powers)));
    } else if (c.fixed_points == 0 && c.size + 1 == n) {
      // A class of n-1 derangements closed under products is a regular normal subgroup.
      std::set<std::uint32_t> members(cl.members(i).begin(), cl.members(i).end());
      members.insert(0);
      std::vector<Point> prod(n);
      bool closed = true;
      for (std::uint32_t a : cl.members(i)) {
        for (std::uint32_t b : cl.members(i)) {
          raw::compose(el[a], el[b], prod);
          if (!members.count(static_cast<std::uint32_t>(el.rank(prod)))) {
            closed = false;
            break;
          }
        }
        if (!closed) break;
      }
      if (!closed) continue;
      std::vector<Permutation> elems;
      for (std::uint32_t r : members) elems.push_back(el.element(r));
      out.push_back(canonical_clique(std::move(elems)));
    }
  }
  return out;
}

namespace {

enum class SearchEnd { exhausted, budget, stopped };

// Backtracking over a sharply transitive array. Each candidate is encoded as
// the bitset of cells (i, pi(i)); two candidates are compatible iff their cell
// sets are disjoint. Domains are forward-checked after every choice and the
// next target is the image of point 0 with the fewest candidates left.
class TransitiveSetSearch {
 public:
  TransitiveSetSearch(const DerangementIndex& der, std::uint64_t budget, std::size_t attempt, std::uint64_t seed)
      : der_(der), n_(der.elements->degree()), words_((n_ * n_ + 63) / 64), budget_(budget) {
    const ElementTable& el = *der.elements;
    std::vector<std::uint32_t> order = der.ranks;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return der.classes->class_of_rank(a) < der.classes->class_of_rank(b);
    });
    if (attempt > 0) {
      std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + attempt);
      std::shuffle(order.begin(), order.end(), rng);
    }
    ranks_ = order;
    bits_.assign(ranks_.size() * words_, 0);
    std::vector<std::vector<std::uint32_t>> domains(n_);
    for (std::size_t c = 0; c < ranks_.size(); ++c) {
      const auto img = el[ranks_[c]];
      for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t cell = i * n_ + img[i];
        bits_[c * words_ + cell / 64] |= std::uint64_t{1} << (cell % 64);
      }
      domains[img[0]].push_back(static_cast<std::uint32_t>(c));
    }
    domains.erase(domains.begin());  // point 0 never maps to itself
    root_ = std::move(domains);
  }

  /// Calls `found` on each complete set; it returns false to stop.
  template <class Found>
  SearchEnd run(Found&& found) {
    chosen_.clear();
    nodes_ = 0;
    return descend(root_, found);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::vector<Permutation> current() const {
    std::vector<Permutation> out{Permutation::identity(n_)};
    for (std::uint32_t c : chosen_) out.push_back(der_.elements->element(ranks_[c]));
    return out;
  }

 private:
  bool compatible(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t* x = &bits_[a * words_];
    const std::uint64_t* y = &bits_[b * words_];
    for (std::size_t w = 0; w < words_; ++w)
      if (x[w] & y[w]) return false;
    return true;
  }

  template <class Found>
  SearchEnd descend(const std::vector<std::vector<std::uint32_t>>& domains, Found& found) {
    if (domains.empty()) return found() ? SearchEnd::exhausted : SearchEnd::stopped;
    std::size_t target = 0;
    for (std::size_t t = 1; t < domains.size(); ++t)
      if (domains[t].size() < domains[target].size()) target = t;
    std::vector<std::vector<std::uint32_t>> next(domains.size() - 1);
    for (std::uint32_t c : domains[target]) {
      if (++nodes_ > budget_) return SearchEnd::budget;
      bool dead = false;
      for (std::size_t t = 0, slot = 0; t < domains.size(); ++t) {
        if (t == target) continue;
        auto& dom = next[slot++];
        dom.clear();
        for (std::uint32_t o : domains[t])
          if (compatible(c, o)) dom.push_back(o);
        if (dom.empty()) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      chosen_.push_back(c);
      SearchEnd end = descend(next, found);
      chosen_.pop_back();
      if (end != SearchEnd::exhausted) return end;
    }
    return SearchEnd::exhausted;
  }

  const DerangementIndex& der_;
  std::size_t n_, words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> ranks_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<std::uint32_t>> root_;
  std::vector<std::uint32_t> chosen_;
};

}  // namespace

std::optional<Clique> search_n_clique(const DerangementIndex& der, const CliqueBudget& budget, std::size_t attempt) {
  TransitiveSetSearch search(der, budget.nodes, attempt, budget.seed);
  std::optional<Clique> result;
  search.run([&] {
    result = canonical_clique(search.current());
    return false;
  });
  return result;
}

std::optional<Clique> find_n_clique(const DerangementIndex& der, const CliqueBudget& budget) {
  auto shortcuts = shortcut_cliques(der);
  if (!shortcuts.empty()) return shortcuts.front();
  return search_n_clique(der, budget, 0);
}

std::vector<std::uint64_t> quotient_class_counts(const ConjugacyClassTable& classes, const Clique& clique) {
  std::vector<std::uint64_t> counts(classes.size(), 0);
  for (const Permutation& p : clique.elements) {
    const Permutation p_inv = invert(p);
    for (const Permutation& s : clique.elements) ++counts[classes.index_of(p_inv * s)];
  }
  return counts;
}

ProjectionNorm projection_norm(const CharacterTable& table, std::size_t chi,
                               const std::vector<std::uint64_t>& quotient_counts) {
  const Character& ch = table[chi];
  ProjectionNorm out;
  out.numerator = Cyclotomic(table.classes().exponent, 0);
  for (std::size_t i = 0; i < quotient_counts.size(); ++i)
    if (quotient_counts[i]) out.numerator += ch.values[i] * static_cast<std::int64_t>(quotient_counts[i]);
  out.numerator *= static_cast<std::int64_t>(ch.degree);
  out.denominator = table.classes().group_order;
  out.value = out.numerator.value().real() / static_cast<long double>(out.denominator);
  out.zero = table.field().is_zero(out.numerator);
  return out;
}

Cyclotomic character_sum(const CharacterTable& table, const ConjugacyClassTable& classes, std::size_t chi,
                         const Clique& clique) {
  Cyclotomic sum(table.classes().exponent, 0);
  for (const Permutation& p : clique.elements) sum += table[chi].values[classes.index_of(p)];
  return sum;
}

bool ModuleByClique::complete() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const ModuleWitness& w) { return w.clique.has_value(); });
}

ModuleByClique module_by_clique(const DerangementIndex& der, const CharacterTable& table, const CliqueBudget& budget) {
  ModuleByClique out;
  std::size_t open = 0;
  for (std::size_t c = 0; c < table.size(); ++c)
    if (c != table.trivial_index() && c != table.standard_index()) {
      out.witnesses.push_back({c, std::nullopt});
      ++open;
    }
  // The quadratic form only depends on the classes of the quotients, so one
  // clique per quotient pattern is enough.
  std::set<std::vector<std::uint64_t>> seen;
  auto consider = [&](Clique clique) {
    auto counts = quotient_class_counts(*der.classes, clique);
    if (!seen.insert(counts).second) return;
    std::optional<std::size_t> index;
    for (ModuleWitness& w : out.witnesses) {
      if (w.clique || projection_norm(table, w.character, counts).zero) continue;
      if (!index) {
        index = out.cliques.size();
        out.cliques.push_back(clique);
      }
      w.clique = index;
      --open;
    }
  };
  for (Clique& c : shortcut_cliques(der)) consider(std::move(c));
  for (std::size_t attempt = 0; open > 0 && attempt < budget.attempts; ++attempt) {
    TransitiveSetSearch search(der, budget.nodes, attempt, budget.seed);
    SearchEnd end = search.run([&] {
      consider(canonical_clique(search.current()));
      return open > 0;
    });
    // A completed search has seen every clique through the identity.
    if (end == SearchEnd::exhausted) break;
  }
  return out;
}

}  // namespace ekr
