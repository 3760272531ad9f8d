/*
Copyright 2026 The bddv Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef BDDV_BRANCHING_HPP_
#define BDDV_BRANCHING_HPP_

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <variant>
#include <vector>

#include "bddv/graph.hpp"
#include "bddv/structures.hpp"

namespace bddv {

// Step number used for the N[v] fallback rule.
inline constexpr int kFallbackOrigin = 0;

// The vertex sets produced by one branching rule. Each set is the deletions
// of one child; the child's budget drops by the set's size.
struct BranchSet {
  std::vector<VertexSet> branches;
  int origin = kFallbackOrigin;

  std::size_t size() const { return branches.size(); }

  // Budget decrement of every branch, in branch order.
  std::vector<int> decrements() const {
    std::vector<int> out;
    out.reserve(branches.size());
    for (const auto& b : branches) out.push_back(static_cast<int>(b.size()));
    return out;
  }
};

namespace detail {

class BranchBuilder {
 public:
  explicit BranchBuilder(int origin) { out_.origin = origin; }

  void add(std::initializer_list<Vertex> vs) { out_.branches.push_back(sets::of(vs)); }
  void add(VertexSet vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    out_.branches.push_back(std::move(vs));
  }

  // Drops repeated sets and strict supersets of other sets; a solution
  // containing the superset also contains the subset. Generation order is
  // preserved.
  BranchSet finish() && {
    auto& bs = out_.branches;
    std::vector<VertexSet> kept;
    kept.reserve(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < bs.size() && !drop; ++j) {
        if (i == j) continue;
        bool subset = std::includes(bs[i].begin(), bs[i].end(),
                                    bs[j].begin(), bs[j].end());
        if (!subset) continue;
        // bs[j] ⊆ bs[i]: drop i if strictly larger, or an earlier duplicate.
        drop = bs[j].size() < bs[i].size() || j < i;
      }
      if (!drop) kept.push_back(bs[i]);
    }
    bs = std::move(kept);
    return std::move(out_);
  }

 private:
  BranchSet out_;
};

// Calls fn(subset) for every size-r subset of `items` in lexicographic order.
template <typename Fn>
void for_each_combination(const VertexSet& items, int r, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (r < 0 || r > n) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[i] = i;
  VertexSet pick(static_cast<std::size_t>(r));
  while (true) {
    for (int i = 0; i < r; ++i) pick[i] = items[idx[i]];
    fn(pick);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Either v, or some d(v)-d of its neighbors.
inline BranchSet branch_high_degree(const Graph& g, int d, const HighDegree& s) {
  const int deg = g.degree(s.v);
  if (deg < d + 2) throw UsageError("branch_high_degree needs degree >= d+2");
  detail::BranchBuilder b(1);
  b.add({s.v});
  detail::for_each_combination(g.open_neighborhood(s.v), deg - d,
                               [&](const VertexSet& pick) { b.add(pick); });
  return std::move(b).finish();
}

inline BranchSet branch_proper_domination(const Graph& g, int d,
                                          const ProperDomination& s) {
  (void)d;
  detail::BranchBuilder b(2);
  if (s.mode == DominationMode::kDominated) {
    for (Vertex w : g.neighbors(s.v)) b.add({w});
  } else {
    for (Vertex w : g.closed_neighborhood(s.v)) {
      if (w != s.u) b.add({w});
    }
  }
  return std::move(b).finish();
}

inline BranchSet branch_good_pair(const Graph& g, int d, const GoodPair& s) {
  (void)g;
  if (s.x < 1 || s.x > d - 2) throw UsageError("good pair needs 1 <= x <= d-2");
  detail::BranchBuilder b(3);
  for (Vertex w : s.plus) b.add({w});
  for (Vertex a : s.n1)
    for (Vertex c : s.n2) b.add({a, c});
  return std::move(b).finish();
}

// Each vertex of N2- alone, then {v1,v3}, {v1,v4}, {v0,v3}.
inline BranchSet branch_close_triple(const Graph& g, int d,
                                     const CloseTriple& s) {
  (void)g;
  (void)d;
  detail::BranchBuilder b(4);
  for (Vertex w : s.n2_minus) b.add({w});
  b.add({s.v1, s.v3});
  b.add({s.v1, s.v4});
  b.add({s.v0, s.v3});
  return std::move(b).finish();
}

inline BranchSet branch_type1_quad(const Graph& g, int d, const TypeIQuad& s) {
  (void)g;
  (void)d;
  detail::BranchBuilder b(5);
  if (s.shape == QuadShape::kCycle) {
    for (Vertex a : s.n12_minus)
      for (Vertex c : s.n34_minus) b.add({a, c});
    for (Vertex c : s.n34_minus) b.add({s.v1, c});
    for (Vertex a : s.n12_minus) b.add({s.v3, a});
    b.add({s.v1, s.v3});
  } else {
    if (!s.v0 || !s.v5) throw UsageError("path quadruple without v0/v5");
    const Vertex v0 = *s.v0, v5 = *s.v5;
    b.add({s.v1, s.v4});
    b.add({v0, s.v3});
    b.add({s.v2, v5});
    for (Vertex x : {v0, s.v1})
      for (Vertex y : s.n34_minus) b.add({x, y});
    for (Vertex x : {s.v4, v5})
      for (Vertex y : s.n12_minus) b.add({x, y});
    for (Vertex a : s.n12_minus)
      for (Vertex c : s.n34_minus) b.add({a, c});
  }
  return std::move(b).finish();
}

inline BranchSet branch_type2_quad(const Graph& g, int d, const TypeIIQuad& s) {
  (void)g;
  (void)d;
  detail::BranchBuilder b(6);
  for (Vertex a : s.n13_minus)
    for (Vertex c : s.n24_minus) b.add({a, c});
  for (Vertex a : s.n13_minus) b.add({s.v1, a});
  for (Vertex c : s.n24_minus) b.add({s.v2, c});
  b.add({s.v1, s.v2});
  return std::move(b).finish();
}

inline BranchSet branch_proper_triple(const Graph& g, int d,
                                      const ProperTriple& s) {
  (void)d;
  detail::BranchBuilder b(7);
  b.add({s.v2});
  b.add({s.v1, s.v3});
  for (Vertex w : g.neighbors(s.v1))
    if (w != s.v2) b.add({s.v3, w});
  for (Vertex w : g.neighbors(s.v3))
    if (w != s.v2) b.add({s.v1, w});
  for (Vertex w1 : s.n2_minus)
    for (Vertex w2 : s.n13_minus) b.add({w1, w2});
  for (Vertex w1 : s.n2_minus)
    for (Vertex w2 : s.n1_minus)
      for (Vertex w3 : s.n3_minus) b.add({w1, w2, w3});
  return std::move(b).finish();
}

// Some vertex of N[v] is in every solution when d(v) >= d+1.
inline BranchSet branch_fallback(const Graph& g, Vertex v) {
  detail::BranchBuilder b(kFallbackOrigin);
  for (Vertex w : g.closed_neighborhood(v)) b.add({w});
  return std::move(b).finish();
}

inline BranchSet make_branches(const Graph& g, int d, const Structure& s) {
  return std::visit(
      [&](const auto& st) -> BranchSet {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, HighDegree>) {
          return branch_high_degree(g, d, st);
        } else if constexpr (std::is_same_v<T, ProperDomination>) {
          return branch_proper_domination(g, d, st);
        } else if constexpr (std::is_same_v<T, GoodPair>) {
          return branch_good_pair(g, d, st);
        } else if constexpr (std::is_same_v<T, CloseTriple>) {
          return branch_close_triple(g, d, st);
        } else if constexpr (std::is_same_v<T, TypeIQuad>) {
          return branch_type1_quad(g, d, st);
        } else if constexpr (std::is_same_v<T, TypeIIQuad>) {
          return branch_type2_quad(g, d, st);
        } else {
          return branch_proper_triple(g, d, st);
        }
      },
      s);
}

}  // namespace bddv

#endif  // BDDV_BRANCHING_HPP_
