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

#ifndef BDDV_GRAPH_HPP_
#define BDDV_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bddv {

using Vertex = std::int32_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Raised when an operation is called outside its contract (bad vertex id,
// deleting an inactive vertex, negative parameters, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1 with reversible vertex deletion.
//
// Adjacency lists hold every original neighbor in sorted order; deleted
// vertices stay in the lists and are skipped through the liveness flags.
// Deletions are recorded on an undo stack so that a search can restore any
// earlier state by rewinding to a mark.
class Graph {
 public:
  // Position on the undo stack. Returned by delete_vertices and consumed by
  // undo; marks must be undone in LIFO order.
  struct Mark {
    std::size_t depth = 0;
  };

  Graph() = default;
  explicit Graph(int n)
      : adj_(static_cast<std::size_t>(check_count(n))),
        active_(static_cast<std::size_t>(n), 1),
        degree_(static_cast<std::size_t>(n), 0),
        active_count_(n) {}

  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                             edges.size())) {}

  // Adds {u,v}. Parallel edges are collapsed; self-loops are rejected.
  // Only valid before any deletion has been made.
  void add_edge(Vertex u, Vertex v) {
    check_range(u);
    check_range(v);
    if (u == v) throw UsageError("self-loop on vertex " + std::to_string(u));
    if (!undo_.empty()) throw UsageError("add_edge after deletions");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++degree_[u];
    ++degree_[v];
    ++edge_count_;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int active_count() const { return active_count_; }
  int edge_count() const { return edge_count_; }

  bool contains(Vertex v) const {
    return v >= 0 && v < vertex_count() && active_[v] != 0;
  }
  bool is_active(Vertex v) const {
    check_range(v);
    return active_[v] != 0;
  }

  int degree(Vertex v) const {
    check_active(v);
    return degree_[v];
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_active(u);
    check_active(v);
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
  }

  // Active neighbors of v in increasing id order. The view is invalidated by
  // deletions.
  auto neighbors(Vertex v) const {
    check_active(v);
    return adj_[v] | std::views::filter([this](Vertex u) {
             return active_[u] != 0;
           });
  }

  VertexSet open_neighborhood(Vertex v) const {
    VertexSet out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for (Vertex u : neighbors(v)) out.push_back(u);
    return out;
  }

  VertexSet closed_neighborhood(Vertex v) const {
    VertexSet out = open_neighborhood(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  VertexSet common_neighbors(Vertex u, Vertex v) const {
    check_active(u);
    check_active(v);
    if (u == v) throw UsageError("common_neighbors needs distinct vertices");
    VertexSet out;
    const auto& au = adj_[u];
    const auto& av = adj_[v];
    std::size_t i = 0, j = 0;
    while (i < au.size() && j < av.size()) {
      if (au[i] < av[j]) {
        ++i;
      } else if (av[j] < au[i]) {
        ++j;
      } else {
        if (active_[au[i]]) out.push_back(au[i]);
        ++i;
        ++j;
      }
    }
    return out;
  }

  int common_neighbor_count(Vertex u, Vertex v) const {
    return static_cast<int>(common_neighbors(u, v).size());
  }

  auto active_vertices() const {
    return std::views::iota(Vertex{0}, static_cast<Vertex>(vertex_count())) |
           std::views::filter([this](Vertex v) { return active_[v] != 0; });
  }

  int max_degree() const {
    int best = 0;
    for (Vertex v : active_vertices()) best = std::max(best, degree_[v]);
    return best;
  }

  // Deletes every vertex of `vertices`. All must be active and distinct.
  // On a usage error nothing is deleted.
  Mark delete_vertices(std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      check_active(vertices[i]);
      for (std::size_t j = 0; j < i; ++j) {
        if (vertices[j] == vertices[i]) {
          throw UsageError("vertex " + std::to_string(vertices[i]) +
                           " listed twice");
        }
      }
    }
    Mark mark{undo_.size()};
    for (Vertex v : vertices) erase(v);
    return mark;
  }
  Mark delete_vertices(std::initializer_list<Vertex> vertices) {
    return delete_vertices(std::span<const Vertex>(vertices.begin(),
                                                   vertices.size()));
  }

  // Restores every deletion made since `mark`.
  void undo(Mark mark) {
    if (mark.depth > undo_.size()) throw UsageError("stale undo mark");
    while (undo_.size() > mark.depth) {
      Vertex v = undo_.back();
      undo_.pop_back();
      restore(v);
    }
  }

  // Sorted edge list {u<v} over active vertices.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u : active_vertices()) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.active_ == b.active_ &&
           a.edges() == b.edges();
  }

 private:
  static int check_count(int n) {
    if (n < 0) throw UsageError("negative vertex count");
    return n;
  }
  void check_range(Vertex v) const {
    if (v < 0 || v >= vertex_count()) {
      throw UsageError("vertex " + std::to_string(v) + " out of range");
    }
  }
  void check_active(Vertex v) const {
    check_range(v);
    if (!active_[v]) {
      throw UsageError("vertex " + std::to_string(v) + " is not active");
    }
  }

  void erase(Vertex v) {
    active_[v] = 0;
    --active_count_;
    for (Vertex u : adj_[v]) {
      if (active_[u]) {
        --degree_[u];
        --edge_count_;
      }
    }
    undo_.push_back(v);
  }

  void restore(Vertex v) {
    for (Vertex u : adj_[v]) {
      if (active_[u]) {
        ++degree_[u];
        ++edge_count_;
      }
    }
    active_[v] = 1;
    ++active_count_;
  }

  std::vector<VertexSet> adj_;
  std::vector<char> active_;
  // Active-neighbor count. Frozen while a vertex is deleted; LIFO undo
  // brings it back in sync.
  std::vector<int> degree_;
  std::vector<Vertex> undo_;
  int active_count_ = 0;
  int edge_count_ = 0;
};

// Deletes a set of vertices for the lifetime of the scope.
class ScopedDeletion {
 public:
  ScopedDeletion(Graph& g, std::span<const Vertex> vertices)
      : g_(g), mark_(g.delete_vertices(vertices)) {}
  ~ScopedDeletion() { g_.undo(mark_); }
  ScopedDeletion(const ScopedDeletion&) = delete;
  ScopedDeletion& operator=(const ScopedDeletion&) = delete;

 private:
  Graph& g_;
  Graph::Mark mark_;
};

struct Instance {
  Graph graph;
  int d = 0;
  int k = 0;

  Instance(Graph g, int degree_bound, int budget)
      : graph(std::move(g)), d(degree_bound), k(budget) {
    if (d < 0) throw UsageError("degree bound d must be nonnegative");
    if (k < 0) throw UsageError("budget k must be nonnegative");
  }
};

struct Solution {
  VertexSet vertices;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const Solution&, const Solution&) = default;
};

// True iff deleting `s` from g leaves maximum degree at most d. Ids outside
// the graph or inactive make the answer false.
inline bool validate_solution(const Graph& g, int d,
                              std::span<const Vertex> s) {
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) {
    if (!g.contains(v)) return false;
    removed[v] = 1;
  }
  for (Vertex v : g.active_vertices()) {
    if (removed[v]) continue;
    int deg = 0;
    for (Vertex u : g.neighbors(v)) deg += removed[u] ? 0 : 1;
    if (deg > d) return false;
  }
  return true;
}

inline bool validate_solution(const Graph& g, int d, const Solution& s) {
  return validate_solution(g, d, std::span<const Vertex>(s.vertices));
}

// Graph family helpers used by tests, the generator and the CLI.
namespace families {

inline Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

// K_{1,leaves} with center 0.
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// K_{a,b}: side A is 0..a-1, side B is a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace families

}  // namespace bddv

#endif  // BDDV_GRAPH_HPP_
