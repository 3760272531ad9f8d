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

#ifndef BDDV_TESTS_SUPPORT_DEFINITIONS_HPP_
#define BDDV_TESTS_SUPPORT_DEFINITIONS_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "bddv/graph.hpp"
#include "bddv/structures.hpp"

// Brute-force restatements of the structure definitions. They read the graph
// once into an adjacency matrix and scan every vertex tuple in lexicographic
// order, sharing no code with the library detectors.
namespace bddv::testing {

using Tuple = std::vector<int>;

class Definitions {
 public:
  Definitions(const Graph& g, int d) : n_(g.vertex_count()), d_(d) {
    adj_.assign(n_, std::vector<char>(n_, 0));
    live_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) live_[v] = g.is_active(v);
    for (auto [u, v] : g.edges()) adj_[u][v] = adj_[v][u] = 1;
    deg_.assign(n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) deg_[u] += adj_[u][v];
  }

  bool full(int v) const { return live_[v] && deg_[v] == d_ + 1; }
  bool adj(int u, int v) const { return adj_[u][v] != 0; }

  int common(int u, int v) const {
    int c = 0;
    for (int w = 0; w < n_; ++w) c += adj_[u][w] && adj_[v][w];
    return c;
  }

  bool close(int u, int v) const {
    return u != v && full(u) && full(v) && adj(u, v) && common(u, v) == d_ - 1;
  }

  bool similar(int u, int v) const {
    if (u == v || !full(u) || !full(v) || adj(u, v)) return false;
    for (int w = 0; w < n_; ++w)
      if (adj_[u][w] != adj_[v][w]) return false;
    return true;
  }

  // Every vertex of degree >= d+1 in N[u] lies in N[v].
  bool dominates(int v, int u) const {
    for (int w = 0; w < n_; ++w) {
      const bool in_nu = w == u || adj(u, w);
      const bool in_nv = w == v || adj(v, w);
      if (in_nu && live_[w] && deg_[w] >= d_ + 1 && !in_nv) return false;
    }
    return true;
  }

  std::optional<Tuple> high_degree() const {
    for (int v = 0; v < n_; ++v)
      if (live_[v] && deg_[v] >= d_ + 2) return Tuple{v};
    return std::nullopt;
  }

  // (v, u, mode) with mode 0 = v dominated by u, 1 = v dominates neighbor u.
  // u ranges over every live vertex, not just neighbors.
  std::optional<Tuple> proper_domination() const {
    for (int v = 0; v < n_; ++v) {
      if (!full(v)) continue;
      for (int u = 0; u < n_; ++u) {
        if (u == v || !live_[u]) continue;
        if (dominates(u, v)) return Tuple{v, u, 0};
        if (adj(v, u) && dominates(v, u)) return Tuple{v, u, 1};
      }
    }
    return std::nullopt;
  }

  std::optional<Tuple> good_pair() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        if (!full(a) || !full(b) || !adj(a, b)) continue;
        const int x = common(a, b);
        if (x >= 1 && x <= d_ - 2) return Tuple{a, b};
      }
    return std::nullopt;
  }

  std::optional<Tuple> close_triple() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) {
          if (a == c || b == a || b == c) continue;
          if (close(a, b) && close(b, c) && !adj(a, c)) return Tuple{a, b, c};
        }
    return std::nullopt;
  }

  // v1-v2-v3-v4 induces P4, or C4 with the closing edge v4v1.
  std::optional<Tuple> type1_quad() const {
    return scan4([&](int a, int b, int c, int e) {
      if (!full(a) || !full(b) || !full(c) || !full(e)) return false;
      if (!adj(a, b) || !adj(b, c) || !adj(c, e)) return false;
      if (adj(a, c) || adj(b, e)) return false;
      return close(a, b) && close(c, e);
    });
  }

  // Induced C4 v1-v2-v3-v4 with {v1,v3} and {v2,v4} similar.
  std::optional<Tuple> type2_quad() const {
    return scan4([&](int a, int b, int c, int e) {
      if (!adj(a, b) || !adj(b, c) || !adj(c, e) || !adj(e, a)) return false;
      if (adj(a, c) || adj(b, e)) return false;
      return similar(a, c) && similar(b, e);
    });
  }

  std::optional<Tuple> proper_triple() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) {
          if (a == b || b == c || a == c) continue;
          if (!full(a) || !full(b) || !full(c)) continue;
          if (!adj(a, b) || !adj(b, c) || adj(a, c)) continue;
          if (close(a, b) || close(b, c) || similar(a, c)) continue;
          return Tuple{a, b, c};
        }
    return std::nullopt;
  }

  // Scan result for priority level 1..7.
  std::optional<Tuple> at(int step) const {
    switch (step) {
      case 1: return high_degree();
      case 2: return proper_domination();
      case 3: return good_pair();
      case 4: return close_triple();
      case 5: return type1_quad();
      case 6: return type2_quad();
      case 7: return proper_triple();
    }
    return std::nullopt;
  }

 private:
  template <typename Pred>
  std::optional<Tuple> scan4(Pred pred) const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int e = 0; e < n_; ++e) {
            if (a == b || a == c || a == e || b == c || b == e || c == e) continue;
            if (pred(a, b, c, e)) return Tuple{a, b, c, e};
          }
    return std::nullopt;
  }

  int n_;
  int d_;
  std::vector<std::vector<char>> adj_;
  std::vector<char> live_;
  std::vector<int> deg_;
};

// The vertex tuple a structure was reported with, in the layout used above.
inline Tuple tuple_of(const Structure& s) {
  return std::visit(
      [](const auto& t) -> Tuple {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, HighDegree>) {
          return {t.v};
        } else if constexpr (std::is_same_v<T, ProperDomination>) {
          return {t.v, t.u, t.mode == DominationMode::kDominated ? 0 : 1};
        } else if constexpr (std::is_same_v<T, GoodPair>) {
          return {t.v1, t.v2};
        } else if constexpr (std::is_same_v<T, CloseTriple> ||
                             std::is_same_v<T, ProperTriple>) {
          return {t.v1, t.v2, t.v3};
        } else {
          return {t.v1, t.v2, t.v3, t.v4};
        }
      },
      s);
}

// Library detector for priority level 1..7, as a tuple.
inline std::optional<Tuple> detector_at(const Graph& g, int d, int step) {
  auto wrap = [](const auto& o) -> std::optional<Tuple> {
    if (!o) return std::nullopt;
    return tuple_of(Structure{*o});
  };
  switch (step) {
    case 1: return wrap(find_high_degree(g, d));
    case 2: return wrap(find_proper_domination(g, d));
    case 3: return wrap(find_good_pair(g, d));
    case 4: return wrap(find_close_triple(g, d));
    case 5: return wrap(find_type1_quad(g, d));
    case 6: return wrap(find_type2_quad(g, d));
    case 7: return wrap(find_proper_triple(g, d));
  }
  return std::nullopt;
}

struct Agreement {
  bool ok = true;
  int step = 0;  // first disagreeing level when !ok
  std::optional<Tuple> got, want;
};

// Compares every level, not just the first one that fires.
inline Agreement compare_detectors(const Graph& g, int d) {
  Definitions def(g, d);
  for (int step = 1; step <= 7; ++step) {
    Agreement a;
    a.want = def.at(step);
    a.got = detector_at(g, d, step);
    if (a.got != a.want) {
      a.ok = false;
      a.step = step;
      return a;
    }
  }
  return {};
}

}  // namespace bddv::testing

#endif  // BDDV_TESTS_SUPPORT_DEFINITIONS_HPP_
