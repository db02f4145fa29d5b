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

#include "ekr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

namespace ekr {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return SIZE_MAX;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  void subtract(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Graph on a vertex list where u ~ v iff u and v agree on some point, i.e. the
// complement of the derangement graph. Independent sets of the derangement
// graph are cliques here.
class IntersectionGraph {
 public:
  IntersectionGraph(const ElementTable& el, std::vector<std::uint32_t> vertices)
      : vertices_(std::move(vertices)), adj_(vertices_.size(), Bits(vertices_.size())) {
    const std::size_t n = el.degree();
    for (std::size_t a = 0; a < vertices_.size(); ++a)
      for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
        const auto x = el[vertices_[a]], y = el[vertices_[b]];
        for (std::size_t i = 0; i < n; ++i)
          if (x[i] == y[i]) {
            adj_[a].set(b);
            adj_[b].set(a);
            break;
          }
      }
  }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Bits& neighbours(std::size_t v) const { return adj_[v]; }
  std::uint32_t rank(std::size_t v) const { return vertices_[v]; }

 private:
  std::vector<std::uint32_t> vertices_;
  std::vector<Bits> adj_;
};

// Clique branch and bound with greedy colouring bounds. In `count` mode it
// counts cliques of exactly `best` vertices instead of improving on `best`.
class CliqueSearch {
 public:
  CliqueSearch(const IntersectionGraph& g, std::size_t best, bool count) : g_(g), best_(best), count_(count) {}

  void expand(std::vector<std::size_t>& current, Bits p) {
    ++nodes_;
    std::vector<std::size_t> order, colour;
    colour_sort(p, order, colour);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      const std::size_t bound = current.size() + colour[idx];
      if (count_ ? bound < best_ : bound <= best_) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      Bits next = p;
      next &= g_.neighbours(v);
      if (next.none()) {
        if (count_) {
          if (current.size() == best_) ++count_found_;
        } else if (current.size() > best_) {
          best_ = current.size();
          best_set_ = current;
        }
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      p.reset(v);
    }
  }

  std::size_t best() const noexcept { return best_; }
  const std::vector<std::size_t>& best_set() const noexcept { return best_set_; }
  const BigInt& found() const noexcept { return count_found_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void colour_sort(Bits q, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
    std::size_t k = 0;
    while (!q.none()) {
      ++k;
      Bits u = q;
      while (!u.none()) {
        const std::size_t v = u.first();
        u.reset(v);
        q.reset(v);
        u.subtract(g_.neighbours(v));
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  const IntersectionGraph& g_;
  std::size_t best_;
  bool count_;
  std::vector<std::size_t> best_set_;
  BigInt count_found_ = 0;
  std::uint64_t nodes_ = 0;
};

bool agree_somewhere(std::span<const Point> x, std::span<const Point> y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == y[i]) return true;
  return false;
}

// Ranks of the subgroup generated by the derangements: the component of the identity.
std::vector<std::uint32_t> identity_component(const DerangementIndex& der) {
  const ElementTable& el = *der.elements;
  std::vector<bool> seen(el.size(), false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  std::vector<Point> prod(el.degree());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = el[queue[head]];
    for (std::uint32_t d : der.ranks) {
      raw::compose(el[d], x, prod);
      const auto r = static_cast<std::uint32_t>(el.rank(prod));
      if (!seen[r]) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

AlphaResult brute_alpha(const DerangementIndex& der, const OracleCaps& caps) {
  const ElementTable& el = *der.elements;
  const ConjugacyClassTable& cl = *der.classes;
  if (el.size() > caps.alpha) throw CapExceeded("brute-force oracle limited to order " + std::to_string(caps.alpha));
  AlphaResult out;

  // Every set containing the identity lies in the identity's neighbourhood
  // of the intersection graph: the non-derangements.
  std::vector<std::uint32_t> candidates;
  for (std::uint64_t r = 1; r < el.size(); ++r)
    if (!der.is_derangement(r)) candidates.push_back(static_cast<std::uint32_t>(r));
  const IntersectionGraph graph(el, candidates);
  std::vector<std::size_t> position(el.size(), SIZE_MAX);
  for (std::size_t v = 0; v < graph.size(); ++v) position[graph.rank(v)] = v;

  // Incumbent: the stabilizer of point 0 without the identity.
  std::vector<std::size_t> incumbent;
  for (std::size_t v = 0; v < graph.size(); ++v)
    if (el[graph.rank(v)][0] == 0) incumbent.push_back(v);
  for (std::size_t a = 0; a < incumbent.size(); ++a)
    for (std::size_t b = a + 1; b < incumbent.size(); ++b)
      if (!graph.neighbours(incumbent[a]).test(incumbent[b])) throw std::logic_error("stabilizer is not intersecting");

  CliqueSearch search(graph, incumbent.size(), false);
  Bits allowed(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) allowed.set(v);
  for (std::size_t c = 1; c < cl.size(); ++c) {
    if (cl[c].fixed_points == 0) continue;
    // Sets meeting class c are conjugate to sets containing its least member;
    // later branches may then ignore class c entirely.
    const std::size_t rep = position[cl.members(c).front()];
    std::vector<std::size_t> current{rep};
    Bits p = allowed;
    p &= graph.neighbours(rep);
    if (!p.none()) search.expand(current, p);
    for (std::uint32_t r : cl.members(c)) allowed.reset(position[r]);
  }
  out.nodes = search.nodes();
  const std::vector<std::size_t>& best = search.best_set().empty() ? incumbent : search.best_set();
  out.alpha = best.size() + 1;
  out.witness.push_back(0);
  for (std::size_t v : best) out.witness.push_back(graph.rank(v));
  std::sort(out.witness.begin(), out.witness.end());

  const std::vector<std::uint32_t> component = identity_component(der);
  out.components = el.size() / component.size();
  if (el.size() <= caps.counting) {
    // All components are translates of the identity's, so the count is
    // (count in one component)^components, and within a component every
    // vertex lies in the same number of maximum sets.
    std::vector<std::uint32_t> local;
    for (std::uint32_t r : component)
      if (r != 0 && !der.is_derangement(r)) local.push_back(r);
    const IntersectionGraph sub(el, local);
    CliqueSearch max_local(sub, 0, false);
    Bits all(sub.size());
    for (std::size_t v = 0; v < sub.size(); ++v) all.set(v);
    std::vector<std::size_t> current;
    if (sub.size() > 0) max_local.expand(current, all);
    const std::size_t alpha_local = max_local.best() + 1;
    BigInt through_identity = 1;
    if (alpha_local > 1) {
      CliqueSearch counter(sub, alpha_local - 1, true);
      counter.expand(current, all);
      through_identity = counter.found();
    }
    const BigInt per_component = BigInt(component.size()) * through_identity / alpha_local;
    out.count = boost::multiprecision::pow(per_component, static_cast<unsigned>(out.components));
    if (alpha_local * out.components != out.alpha) throw std::logic_error("component count disagrees with the search");
  }
  return out;
}

BruteSpectrum brute_spectrum(const DerangementIndex& der, const OracleCaps& caps, long double tolerance) {
  const ElementTable& el = *der.elements;
  const auto g = static_cast<Eigen::Index>(el.size());
  if (el.size() > caps.spectrum) throw CapExceeded("dense spectrum limited to order " + std::to_string(caps.spectrum));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g, g);
  for (Eigen::Index x = 0; x < g; ++x)
    for (Eigen::Index y = x + 1; y < g; ++y)
      if (!agree_somewhere(el[static_cast<std::uint64_t>(x)], el[static_cast<std::uint64_t>(y)])) a(x, y) = a(y, x) = 1;
  BruteSpectrum out;
  std::map<std::int64_t, std::uint64_t, std::greater<>> tally;
  auto record = [&](long double v, long double imag) {
    const long double k = std::round(v);
    out.max_deviation = std::max({out.max_deviation, std::fabs(v - k), std::fabs(imag)});
    ++tally[static_cast<std::int64_t>(k)];
  };
  // The symmetric QR iteration can stall on the large eigenvalue clusters of
  // these graphs; the nonsymmetric Schur solver is slower but converges.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success) {
    for (Eigen::Index i = 0; i < g; ++i) record(solver.eigenvalues()(i), 0);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> general(a, false);
    if (general.info() != Eigen::Success) throw std::runtime_error("dense eigensolvers did not converge");
    for (Eigen::Index i = 0; i < g; ++i) record(general.eigenvalues()(i).real(), general.eigenvalues()(i).imag());
    out.fallback = true;
  }
  out.entries.assign(tally.begin(), tally.end());
  out.integral = out.max_deviation <= tolerance;
  return out;
}

}  // namespace ekr
