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

#ifndef BDDV_ORACLE_HPP_
#define BDDV_ORACLE_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bddv/graph.hpp"
#include "bddv/structures.hpp"

namespace bddv {

// ---------------------------------------------------------------------------
// Brute force

inline constexpr int kBruteForceMaxVertices = 20;

namespace detail {

// Bitmask view of the active part of a graph (n <= 20).
struct MaskGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::uint32_t active = 0;

  explicit MaskGraph(const Graph& g) : n(g.vertex_count()) {
    if (n > kBruteForceMaxVertices) {
      throw UsageError("brute force is limited to " +
                       std::to_string(kBruteForceMaxVertices) + " vertices");
    }
    adj.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    for (Vertex v : g.active_vertices()) active |= 1u << v;
  }

  bool feasible(std::uint32_t removed, int d) const {
    std::uint32_t keep = active & ~removed;
    for (std::uint32_t rest = keep; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (std::popcount(adj[v] & keep) > d) return false;
    }
    return true;
  }
};

inline Solution to_solution(std::uint32_t mask) {
  Solution s;
  for (; mask != 0; mask &= mask - 1) s.vertices.push_back(std::countr_zero(mask));
  return s;
}

}  // namespace detail

// Tries every vertex subset of size 0, 1, ..., k (lexicographic within a
// size) and returns the first d-deletion set.
inline std::optional<Solution> brute_force_decision(const Graph& g, int d, int k) {
  if (d < 0 || k < 0) throw UsageError("d and k must be nonnegative");
  detail::MaskGraph mg(g);
  VertexSet verts;
  for (Vertex v : g.active_vertices()) verts.push_back(v);
  const int m = static_cast<int>(verts.size());
  for (int size = 0; size <= std::min(k, m); ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int i : idx) mask |= 1u << verts[i];
      if (mg.feasible(mask, d)) return detail::to_solution(mask);
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Minimum d-deletion set; lexicographically least among the smallest.
inline Solution brute_force_minimum(const Graph& g, int d) {
  auto s = brute_force_decision(g, d, g.active_count());
  if (!s) throw std::logic_error("deleting every vertex must be feasible");
  return *s;
}

// ---------------------------------------------------------------------------
// Instance generation

// SplitMix64 (Steele, Lea & Flood 2014). Fixed so that a (n, p, seed) triple
// names the same graph everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw UsageError("empty range");
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound));
  }

  // Independent stream derived from this one.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

enum class PlantKind {
  kHighDegree,
  kProperDomination,
  kGoodPair,
  kCloseTriple,
  kType1Cycle,
  kType1Path,
  kType2Quad,
  kProperTriple,
};

struct Plant {
  PlantKind kind = PlantKind::kHighDegree;
  int d = 0;
  int x = 0;  // good pair / proper triple only
};

struct GeneratorSpec {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::optional<Plant> plant;
};

inline std::string_view plant_name(PlantKind k) {
  switch (k) {
    case PlantKind::kHighDegree: return "high-degree";
    case PlantKind::kProperDomination: return "proper-domination";
    case PlantKind::kGoodPair: return "good-pair";
    case PlantKind::kCloseTriple: return "close-triple";
    case PlantKind::kType1Cycle: return "type1-cycle";
    case PlantKind::kType1Path: return "type1-path";
    case PlantKind::kType2Quad: return "type2-quad";
    case PlantKind::kProperTriple: return "proper-triple";
  }
  return "?";
}

inline std::optional<PlantKind> parse_plant_kind(std::string_view name) {
  for (auto k : {PlantKind::kHighDegree, PlantKind::kProperDomination,
                 PlantKind::kGoodPair, PlantKind::kCloseTriple,
                 PlantKind::kType1Cycle, PlantKind::kType1Path,
                 PlantKind::kType2Quad, PlantKind::kProperTriple}) {
    if (plant_name(k) == name) return k;
  }
  return std::nullopt;
}

// Vertices the planted gadget occupies.
inline int plant_size(const Plant& pl) {
  const int d = pl.d;
  switch (pl.kind) {
    case PlantKind::kHighDegree: return d + 3;
    case PlantKind::kProperDomination: return d + 2;
    case PlantKind::kGoodPair: return 2 + pl.x + 2 * (d - pl.x);
    case PlantKind::kCloseTriple: return 3 + (d - 1) + 2 + 2 * d;
    case PlantKind::kType1Cycle: return 4 + 2 * (d - 1);
    case PlantKind::kType1Path: return 6 + 2 * (d - 1);
    case PlantKind::kType2Quad: return 4 + 2 * (d - 1);
    case PlantKind::kProperTriple: return 3 + pl.x + 2 * (d - pl.x) + (d - 1);
  }
  return 0;
}

// Whether the target detector, run on its own, finds a configuration.
inline bool plant_present(const Graph& g, const Plant& pl) {
  switch (pl.kind) {
    case PlantKind::kHighDegree: return find_high_degree(g, pl.d).has_value();
    case PlantKind::kProperDomination:
      return find_proper_domination(g, pl.d).has_value();
    case PlantKind::kGoodPair: return find_good_pair(g, pl.d).has_value();
    case PlantKind::kCloseTriple: return find_close_triple(g, pl.d).has_value();
    case PlantKind::kType1Cycle:
    case PlantKind::kType1Path: return find_type1_quad(g, pl.d).has_value();
    case PlantKind::kType2Quad: return find_type2_quad(g, pl.d).has_value();
    case PlantKind::kProperTriple: return find_proper_triple(g, pl.d).has_value();
  }
  return false;
}

namespace detail {

// Builds the gadget on vertices 0..plant_size-1 and marks the vertices whose
// neighborhoods must not change.
inline void build_plant(Graph& g, const Plant& pl, std::vector<char>& sealed) {
  const int d = pl.d;
  Vertex next = 0;
  auto fresh = [&] { return next++; };
  auto seal = [&](Vertex v) { sealed[v] = 1; };
  auto fresh_block = [&](int count) {
    VertexSet out;
    for (int i = 0; i < count; ++i) out.push_back(fresh());
    return out;
  };

  switch (pl.kind) {
    case PlantKind::kHighDegree: {
      Vertex c = fresh();
      for (Vertex w : fresh_block(d + 2)) g.add_edge(c, w);
      break;
    }
    case PlantKind::kProperDomination: {
      // N[v] ⊆ N[u], so u dominates v.
      Vertex v = fresh(), u = fresh();
      g.add_edge(v, u);
      for (Vertex a : fresh_block(d)) {
        g.add_edge(v, a);
        g.add_edge(u, a);
      }
      seal(v);
      seal(u);
      break;
    }
    case PlantKind::kGoodPair: {
      Vertex v1 = fresh(), v2 = fresh();
      g.add_edge(v1, v2);
      for (Vertex c : fresh_block(pl.x)) {
        g.add_edge(v1, c);
        g.add_edge(v2, c);
      }
      for (Vertex a : fresh_block(d - pl.x)) g.add_edge(v1, a);
      for (Vertex a : fresh_block(d - pl.x)) g.add_edge(v2, a);
      seal(v1);
      seal(v2);
      break;
    }
    case PlantKind::kCloseTriple: {
      Vertex v1 = fresh(), v2 = fresh(), v3 = fresh();
      g.add_edge(v1, v2);
      g.add_edge(v2, v3);
      for (Vertex c : fresh_block(d - 1)) {
        g.add_edge(v1, c);
        g.add_edge(v2, c);
        g.add_edge(v3, c);
      }
      Vertex v0 = fresh(), v4 = fresh();
      g.add_edge(v1, v0);
      g.add_edge(v3, v4);
      for (Vertex w : fresh_block(d)) g.add_edge(v0, w);
      for (Vertex w : fresh_block(d)) g.add_edge(v4, w);
      for (Vertex v : {v0, v1, v2, v3, v4}) seal(v);
      break;
    }
    case PlantKind::kType1Cycle:
    case PlantKind::kType1Path: {
      Vertex v1 = fresh(), v2 = fresh(), v3 = fresh(), v4 = fresh();
      g.add_edge(v1, v2);
      g.add_edge(v2, v3);
      g.add_edge(v3, v4);
      if (pl.kind == PlantKind::kType1Cycle) g.add_edge(v4, v1);
      for (Vertex c : fresh_block(d - 1)) {
        g.add_edge(v1, c);
        g.add_edge(v2, c);
      }
      for (Vertex c : fresh_block(d - 1)) {
        g.add_edge(v3, c);
        g.add_edge(v4, c);
      }
      if (pl.kind == PlantKind::kType1Path) {
        g.add_edge(v1, fresh());
        g.add_edge(v4, fresh());
      }
      for (Vertex v : {v1, v2, v3, v4}) seal(v);
      break;
    }
    case PlantKind::kType2Quad: {
      Vertex v1 = fresh(), v2 = fresh(), v3 = fresh(), v4 = fresh();
      g.add_edge(v1, v2);
      g.add_edge(v2, v3);
      g.add_edge(v3, v4);
      g.add_edge(v4, v1);
      for (Vertex c : fresh_block(d - 1)) {
        g.add_edge(v1, c);
        g.add_edge(v3, c);
      }
      for (Vertex c : fresh_block(d - 1)) {
        g.add_edge(v2, c);
        g.add_edge(v4, c);
      }
      for (Vertex v : {v1, v2, v3, v4}) seal(v);
      break;
    }
    case PlantKind::kProperTriple: {
      Vertex v1 = fresh(), v2 = fresh(), v3 = fresh();
      g.add_edge(v1, v2);
      g.add_edge(v2, v3);
      for (Vertex c : fresh_block(pl.x)) {
        g.add_edge(v1, c);
        g.add_edge(v3, c);
      }
      for (Vertex a : fresh_block(d - pl.x)) g.add_edge(v1, a);
      for (Vertex a : fresh_block(d - pl.x)) g.add_edge(v3, a);
      for (Vertex a : fresh_block(d - 1)) g.add_edge(v2, a);
      for (Vertex v : {v1, v2, v3}) seal(v);
      break;
    }
  }
}

inline void check_plant(const Plant& pl) {
  const int d = pl.d;
  auto need = [](bool ok, const char* what) {
    if (!ok) throw UsageError(what);
  };
  need(d >= 0, "plant: d must be nonnegative");
  switch (pl.kind) {
    case PlantKind::kGoodPair:
      need(pl.x >= 1 && pl.x <= d - 2, "plant good-pair: need 1 <= x <= d-2");
      break;
    case PlantKind::kCloseTriple:
    case PlantKind::kType1Cycle:
    case PlantKind::kType1Path:
    case PlantKind::kType2Quad:
      need(d >= 1, "plant: this structure needs d >= 1");
      break;
    case PlantKind::kProperTriple:
      need(d >= 2, "plant proper-triple: needs d >= 2");
      need(pl.x >= 0 && pl.x <= d - 1, "plant proper-triple: need 0 <= x <= d-1");
      break;
    default:
      break;
  }
}

}  // namespace detail

// Deterministic graph for spec (n, p, seed).
//
// Without a plant this is G(n, p): every pair u < v in lexicographic order
// draws one uniform and becomes an edge when the draw is below p. With a plant
// the gadget occupies the lowest ids; the pairs are then shuffled (Fisher-Yates
// on the same stream) and each draws its uniform in shuffled order, adding a
// padding edge unless it touches a sealed gadget vertex or (except for the
// high-degree gadget) would lift a degree above d+1.
inline Graph generate(const GeneratorSpec& spec) {
  if (spec.n < 0) throw UsageError("n must be nonnegative");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw UsageError("p must lie in [0, 1]");
  Graph g(spec.n);
  std::vector<char> sealed(static_cast<std::size_t>(spec.n), 0);
  std::optional<int> cap;
  if (spec.plant) {
    detail::check_plant(*spec.plant);
    if (plant_size(*spec.plant) > spec.n) {
      throw UsageError("plant " + std::string(plant_name(spec.plant->kind)) +
                       " needs n >= " + std::to_string(plant_size(*spec.plant)));
    }
    detail::build_plant(g, *spec.plant, sealed);
    if (spec.plant->kind != PlantKind::kHighDegree) cap = spec.plant->d + 1;
  }

  SplitMix64 rng(spec.seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < spec.n; ++u)
    for (Vertex v = u + 1; v < spec.n; ++v) pairs.emplace_back(u, v);
  if (spec.plant) {
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
  }
  for (auto [u, v] : pairs) {
    const bool draw = rng.uniform() < spec.p;
    if (!draw || sealed[u] || sealed[v] || g.adjacent(u, v)) continue;
    if (cap && (g.degree(u) >= *cap || g.degree(v) >= *cap)) continue;
    g.add_edge(u, v);
  }

  if (spec.plant && !plant_present(g, *spec.plant)) {
    throw std::logic_error("planted " +
                           std::string(plant_name(spec.plant->kind)) +
                           " not found after generation");
  }
  return g;
}

}  // namespace bddv

#endif  // BDDV_ORACLE_HPP_
