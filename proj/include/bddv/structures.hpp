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

#ifndef BDDV_STRUCTURES_HPP_
#define BDDV_STRUCTURES_HPP_

#include <algorithm>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bddv/graph.hpp"

// Detectors for the configurations the search branches on. Every detector is
// a plain scan over the current graph and returns the lexicographically
// smallest qualifying vertex tuple, so search trees are reproducible.
//
// Throughout, a "full" vertex is one of degree exactly d+1: the smallest
// degree that still violates the bound.
namespace bddv {

namespace sets {

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline VertexSet subtract(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline VertexSet of(std::initializer_list<Vertex> vs) {
  VertexSet out(vs);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sets

// ---------------------------------------------------------------------------
// Structure variants

struct HighDegree {
  Vertex v = 0;
};

enum class DominationMode {
  kDominated,  // v is dominated by its neighbor u
  kDominates,  // v dominates its neighbor u
};

struct ProperDomination {
  Vertex v = 0;
  Vertex u = 0;
  DominationMode mode = DominationMode::kDominated;
};

struct GoodPair {
  Vertex v1 = 0, v2 = 0;
  VertexSet plus;  // common neighbors plus v1, v2
  VertexSet n1;    // N(v1) minus plus
  VertexSet n2;    // N(v2) minus plus
  int x = 0;       // number of common neighbors
};

struct CloseTriple {
  Vertex v1 = 0, v2 = 0, v3 = 0;
  Vertex v0 = 0;  // the neighbor of v1 outside N[v2]
  Vertex v4 = 0;  // the neighbor of v3 outside N[v2]
  VertexSet n2_minus;  // N[v2] minus {v1, v3}
};

enum class QuadShape { kCycle, kPath };

struct TypeIQuad {
  Vertex v1 = 0, v2 = 0, v3 = 0, v4 = 0;
  QuadShape shape = QuadShape::kCycle;
  VertexSet n12_minus;  // N(v1) ∩ N(v2)
  VertexSet n34_minus;  // N(v3) ∩ N(v4)
  // Path shape only; v0 == v5 is allowed.
  std::optional<Vertex> v0, v5;
};

struct TypeIIQuad {
  Vertex v1 = 0, v2 = 0, v3 = 0, v4 = 0;
  VertexSet n13_minus;  // N(v1) minus {v2, v4}
  VertexSet n24_minus;  // N(v2) minus {v1, v3}
};

struct ProperTriple {
  Vertex v1 = 0, v2 = 0, v3 = 0;
  VertexSet n13_minus;  // (N(v1) ∩ N(v3)) minus {v2}
  VertexSet n1_minus;   // N(v1) minus N(v3)
  VertexSet n3_minus;   // N(v3) minus N(v1)
  VertexSet n2_minus;   // N(v2) minus {v1, v3}
  int x = 0;            // |n13_minus|
};

using Structure = std::variant<HighDegree, ProperDomination, GoodPair,
                               CloseTriple, TypeIQuad, TypeIIQuad,
                               ProperTriple>;

// Priority level 1..7 of a structure; equals its position in the dispatch
// order.
inline int step_of(const Structure& s) {
  return static_cast<int>(s.index()) + 1;
}

inline std::string_view structure_name(int step) {
  switch (step) {
    case 1: return "high-degree";
    case 2: return "proper-domination";
    case 3: return "good-pair";
    case 4: return "close-triple";
    case 5: return "type1-quad";
    case 6: return "type2-quad";
    case 7: return "proper-triple";
    default: return "fallback";
  }
}

// ---------------------------------------------------------------------------
// Predicates

inline bool is_full(const Graph& g, int d, Vertex v) {
  return g.degree(v) == d + 1;
}

// Adjacent full vertices with exactly d-1 common neighbors.
inline bool is_close_pair(const Graph& g, int d, Vertex u, Vertex v) {
  return u != v && is_full(g, d, u) && is_full(g, d, v) && g.adjacent(u, v) &&
         g.common_neighbor_count(u, v) == d - 1;
}

// Nonadjacent full vertices with identical neighbor sets.
inline bool is_similar_pair(const Graph& g, int d, Vertex u, Vertex v) {
  if (u == v) throw UsageError("is_similar_pair needs distinct vertices");
  if (!is_full(g, d, u) || !is_full(g, d, v) || g.adjacent(u, v)) return false;
  return std::ranges::equal(g.neighbors(u), g.neighbors(v));
}

// v dominates u: every vertex of degree >= d+1 in N[u] lies in N[v].
inline bool dominates(const Graph& g, int d, Vertex v, Vertex u) {
  auto covered = [&](Vertex w) { return w == v || g.adjacent(v, w); };
  if (g.degree(u) >= d + 1 && !covered(u)) return false;
  for (Vertex w : g.neighbors(u)) {
    if (g.degree(w) >= d + 1 && !covered(w)) return false;
  }
  return true;
}

struct PairClass {
  enum class Kind { kNotApplicable, kGood, kClose, kDisjoint };
  Kind kind = Kind::kNotApplicable;
  int x = 0;  // common neighbors, for applicable pairs

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

// Classifies an adjacent pair of full vertices by its common neighbor count.
// A pair with no common neighbor reports kDisjoint even for d = 1, where it
// also meets the close-pair count; detectors use is_close_pair directly.
inline PairClass classify_pair(const Graph& g, int d, Vertex u, Vertex v) {
  using Kind = PairClass::Kind;
  if (u == v || !is_full(g, d, u) || !is_full(g, d, v) || !g.adjacent(u, v)) {
    return {};
  }
  int x = g.common_neighbor_count(u, v);
  if (x == 0) return {Kind::kDisjoint, 0};
  if (x <= d - 2) return {Kind::kGood, x};
  if (x == d - 1) return {Kind::kClose, x};
  return {Kind::kNotApplicable, x};
}

// ---------------------------------------------------------------------------
// Detectors, in dispatch order

inline std::optional<HighDegree> find_high_degree(const Graph& g, int d) {
  for (Vertex v : g.active_vertices()) {
    if (g.degree(v) >= d + 2) return HighDegree{v};
  }
  return std::nullopt;
}

inline std::optional<ProperDomination> find_proper_domination(const Graph& g,
                                                              int d) {
  // A full v can only be dominated by a neighbor: v itself is in N[v] and has
  // degree >= d+1, so it must lie in N[u].
  for (Vertex v : g.active_vertices()) {
    if (!is_full(g, d, v)) continue;
    for (Vertex u : g.neighbors(v)) {
      if (dominates(g, d, u, v)) {
        return ProperDomination{v, u, DominationMode::kDominated};
      }
      if (dominates(g, d, v, u)) {
        return ProperDomination{v, u, DominationMode::kDominates};
      }
    }
  }
  return std::nullopt;
}

inline GoodPair make_good_pair(const Graph& g, Vertex v1, Vertex v2) {
  GoodPair s;
  s.v1 = v1;
  s.v2 = v2;
  VertexSet common = g.common_neighbors(v1, v2);
  s.x = static_cast<int>(common.size());
  s.plus = sets::unite(common, sets::of({v1, v2}));
  s.n1 = sets::subtract(g.open_neighborhood(v1), s.plus);
  s.n2 = sets::subtract(g.open_neighborhood(v2), s.plus);
  return s;
}

inline std::optional<GoodPair> find_good_pair(const Graph& g, int d) {
  for (Vertex v1 : g.active_vertices()) {
    if (!is_full(g, d, v1)) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (v2 < v1 || !is_full(g, d, v2)) continue;
      int x = g.common_neighbor_count(v1, v2);
      if (x >= 1 && x <= d - 2) return make_good_pair(g, v1, v2);
    }
  }
  return std::nullopt;
}

// The single vertex of N(a) outside N[b]; throws if there is not exactly one.
inline Vertex private_neighbor(const Graph& g, Vertex a, Vertex b) {
  VertexSet rest =
      sets::subtract(g.open_neighborhood(a), g.closed_neighborhood(b));
  if (rest.size() != 1) {
    throw std::logic_error("expected exactly one neighbor of " +
                           std::to_string(a) + " outside N[" +
                           std::to_string(b) + "], found " +
                           std::to_string(rest.size()));
  }
  return rest.front();
}

inline std::optional<CloseTriple> find_close_triple(const Graph& g, int d) {
  for (Vertex v1 : g.active_vertices()) {
    if (!is_full(g, d, v1)) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (!is_close_pair(g, d, v1, v2)) continue;
      for (Vertex v3 : g.neighbors(v2)) {
        if (v3 == v1 || g.adjacent(v1, v3) || !is_close_pair(g, d, v2, v3)) {
          continue;
        }
        CloseTriple s;
        s.v1 = v1;
        s.v2 = v2;
        s.v3 = v3;
        s.v0 = private_neighbor(g, v1, v2);
        s.v4 = private_neighbor(g, v3, v2);
        s.n2_minus = sets::subtract(g.closed_neighborhood(v2), sets::of({v1, v3}));
        return s;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<TypeIQuad> find_type1_quad(const Graph& g, int d) {
  for (Vertex v1 : g.active_vertices()) {
    if (!is_full(g, d, v1)) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (!is_close_pair(g, d, v1, v2)) continue;
      for (Vertex v3 : g.neighbors(v2)) {
        if (v3 == v1 || !is_full(g, d, v3) || g.adjacent(v1, v3)) continue;
        for (Vertex v4 : g.neighbors(v3)) {
          if (v4 == v2 || g.adjacent(v2, v4) ||
              !is_close_pair(g, d, v3, v4)) {
            continue;
          }
          TypeIQuad s;
          s.v1 = v1;
          s.v2 = v2;
          s.v3 = v3;
          s.v4 = v4;
          s.shape = g.adjacent(v1, v4) ? QuadShape::kCycle : QuadShape::kPath;
          s.n12_minus = g.common_neighbors(v1, v2);
          s.n34_minus = g.common_neighbors(v3, v4);
          if (s.shape == QuadShape::kPath) {
            s.v0 = private_neighbor(g, v1, v2);
            s.v5 = private_neighbor(g, v4, v3);
          }
          return s;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<TypeIIQuad> find_type2_quad(const Graph& g, int d) {
  for (Vertex v1 : g.active_vertices()) {
    if (!is_full(g, d, v1)) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (!is_full(g, d, v2)) continue;
      for (Vertex v3 : g.neighbors(v2)) {
        if (v3 == v1 || !is_similar_pair(g, d, v1, v3)) continue;
        for (Vertex v4 : g.neighbors(v3)) {
          if (v4 == v2 || !is_similar_pair(g, d, v2, v4)) continue;
          TypeIIQuad s;
          s.v1 = v1;
          s.v2 = v2;
          s.v3 = v3;
          s.v4 = v4;
          s.n13_minus = sets::subtract(g.open_neighborhood(v1), sets::of({v2, v4}));
          s.n24_minus = sets::subtract(g.open_neighborhood(v2), sets::of({v1, v3}));
          return s;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<ProperTriple> find_proper_triple(const Graph& g, int d) {
  for (Vertex v1 : g.active_vertices()) {
    if (!is_full(g, d, v1)) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (!is_full(g, d, v2) || is_close_pair(g, d, v1, v2)) continue;
      for (Vertex v3 : g.neighbors(v2)) {
        if (v3 == v1 || !is_full(g, d, v3) || g.adjacent(v1, v3) ||
            is_close_pair(g, d, v2, v3) || is_similar_pair(g, d, v1, v3)) {
          continue;
        }
        ProperTriple s;
        s.v1 = v1;
        s.v2 = v2;
        s.v3 = v3;
        VertexSet n1 = g.open_neighborhood(v1);
        VertexSet n3 = g.open_neighborhood(v3);
        s.n13_minus = sets::subtract(sets::intersect(n1, n3), sets::of({v2}));
        s.n1_minus = sets::subtract(n1, n3);
        s.n3_minus = sets::subtract(n3, n1);
        s.n2_minus = sets::subtract(g.open_neighborhood(v2), sets::of({v1, v3}));
        s.x = static_cast<int>(s.n13_minus.size());
        return s;
      }
    }
  }
  return std::nullopt;
}

// Runs the detectors in priority order and returns the first hit.
inline std::optional<Structure> detect(const Graph& g, int d) {
  if (auto s = find_high_degree(g, d)) return Structure{*s};
  if (auto s = find_proper_domination(g, d)) return Structure{*s};
  if (auto s = find_good_pair(g, d)) return Structure{std::move(*s)};
  if (auto s = find_close_triple(g, d)) return Structure{std::move(*s)};
  if (auto s = find_type1_quad(g, d)) return Structure{std::move(*s)};
  if (auto s = find_type2_quad(g, d)) return Structure{std::move(*s)};
  if (auto s = find_proper_triple(g, d)) return Structure{std::move(*s)};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structural assumptions
//
// Properties the branching rules are derived under, assuming every earlier
// detector came up empty. The rules stay sound when one fails (branch sets
// just collapse), so the search only counts these.

inline std::vector<std::string> assumption_violations(const Graph& g, int d,
                                                      const Structure& s) {
  std::vector<std::string> out;
  auto require = [&](bool ok, std::string what) {
    if (!ok) out.push_back(std::move(what));
  };
  auto disjoint = [](const VertexSet& a, const VertexSet& b) {
    return sets::intersect(a, b).empty();
  };
  const auto expect = static_cast<std::size_t>(std::max(d - 1, 0));

  if (const auto* t = std::get_if<CloseTriple>(&s)) {
    require(is_full(g, d, t->v0), "close triple: v0 is not of degree d+1");
    require(is_full(g, d, t->v4), "close triple: v4 is not of degree d+1");
    require(t->n2_minus.size() == static_cast<std::size_t>(d),
            "close triple: |N2-| != d");
  } else if (const auto* q = std::get_if<TypeIQuad>(&s)) {
    require(disjoint(q->n12_minus, q->n34_minus),
            "type-I quadruple: N12- and N34- intersect");
    require(q->n12_minus.size() == expect && q->n34_minus.size() == expect,
            "type-I quadruple: side set size != d-1");
  } else if (const auto* q2 = std::get_if<TypeIIQuad>(&s)) {
    require(disjoint(q2->n13_minus, q2->n24_minus),
            "type-II quadruple: N13- and N24- intersect");
    require(q2->n13_minus.size() == expect && q2->n24_minus.size() == expect,
            "type-II quadruple: side set size != d-1");
  } else if (const auto* p = std::get_if<ProperTriple>(&s)) {
    require(g.common_neighbors(p->v1, p->v2).empty(),
            "proper triple: N(v1) and N(v2) intersect");
    require(g.common_neighbors(p->v2, p->v3).empty(),
            "proper triple: N(v2) and N(v3) intersect");
    require(p->x >= 0 && p->x <= d - 1, "proper triple: x outside [0, d-1]");
  }
  return out;
}

}  // namespace bddv

#endif  // BDDV_STRUCTURES_HPP_
