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

#ifndef BDDV_SEARCH_HPP_
#define BDDV_SEARCH_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bddv/analysis.hpp"
#include "bddv/branching.hpp"
#include "bddv/graph.hpp"
#include "bddv/structures.hpp"

namespace bddv {

// Counters collected over one or more search trees.
struct SearchStats {
  std::uint64_t nodes = 0;
  // Nodes that branched on step 1..7; index 0 counts fallback nodes.
  std::array<std::uint64_t, 8> per_step{};
  std::uint64_t fallback_count = 0;
  // Structural assumptions found broken at branching nodes.
  std::uint64_t violations = 0;
  std::map<std::string, std::uint64_t> violation_kinds;
  int max_depth = 0;
  // Distinct budget-decrement vectors (sorted) seen per origin step, with the
  // number of nodes that produced each.
  std::map<int, std::map<std::vector<int>, std::uint64_t>> decrement_vectors;
  // Close-triple nodes with more singleton branches than the d-1 that the
  // stated (d-1)·C(k-1) + 3·C(k-2) recurrence counts.
  std::uint64_t close_triple_extra_singletons = 0;

  void merge(const SearchStats& o) {
    nodes += o.nodes;
    for (std::size_t i = 0; i < per_step.size(); ++i) per_step[i] += o.per_step[i];
    fallback_count += o.fallback_count;
    violations += o.violations;
    for (const auto& [k, c] : o.violation_kinds) violation_kinds[k] += c;
    max_depth = std::max(max_depth, o.max_depth);
    for (const auto& [step, vecs] : o.decrement_vectors)
      for (const auto& [v, c] : vecs) decrement_vectors[step][v] += c;
    close_triple_extra_singletons += o.close_triple_extra_singletons;
  }

  // Largest branching factor among the recorded decrement vectors, with the
  // origin step that produced it. Steps with a single branch give 1.
  std::pair<double, int> max_branching_factor() const {
    double best = 1.0;
    int origin = -1;
    for (const auto& [step, vecs] : decrement_vectors) {
      for (const auto& [v, c] : vecs) {
        (void)c;
        double f = branching_factor(Recurrence(v)).value;
        if (f > best) {
          best = f;
          origin = step;
        }
      }
    }
    return {best, origin};
  }
};

struct DecisionResult {
  std::optional<Solution> solution;
  SearchStats stats;
};

namespace detail {

class Searcher {
 public:
  Searcher(Graph& g, int d, SearchStats& stats) : g_(g), d_(d), stats_(stats) {}

  bool run(int k, int depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (g_.max_degree() <= d_) return true;
    if (k == 0) return false;

    BranchSet branches;
    if (auto s = detect(g_, d_)) {
      ++stats_.per_step[step_of(*s)];
      for (auto& what : assumption_violations(g_, d_, *s)) {
        ++stats_.violations;
        ++stats_.violation_kinds[what];
      }
      branches = make_branches(g_, d_, *s);
    } else {
      // Max degree is d+1 here (step 1 failed) yet nothing matched.
      ++stats_.per_step[kFallbackOrigin];
      ++stats_.fallback_count;
      branches = branch_fallback(g_, lowest_full_vertex());
    }

    std::vector<int> dec = branches.decrements();
    std::sort(dec.begin(), dec.end());
    ++stats_.decrement_vectors[branches.origin][dec];
    if (branches.origin == 4 && std::count(dec.begin(), dec.end(), 1) > d_ - 1)
      ++stats_.close_triple_extra_singletons;

    for (const VertexSet& b : branches.branches) {
      const int cost = static_cast<int>(b.size());
      if (cost > k) continue;
      Graph::Mark mark = g_.delete_vertices(b);
      const std::size_t before = partial_.size();
      partial_.insert(partial_.end(), b.begin(), b.end());
      bool found = run(k - cost, depth + 1);
      g_.undo(mark);
      if (found) return true;
      partial_.resize(before);
    }
    return false;
  }

  VertexSet take_solution() {
    VertexSet out = std::move(partial_);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Vertex lowest_full_vertex() const {
    for (Vertex v : g_.active_vertices())
      if (g_.degree(v) == d_ + 1) return v;
    throw std::logic_error("no vertex of degree d+1 for fallback");
  }

  Graph& g_;
  int d_;
  SearchStats& stats_;
  VertexSet partial_;
};

}  // namespace detail

// Decides whether at most inst.k deletions bring the maximum degree down to
// inst.d, returning a witness set when they do.
inline DecisionResult solve_decision(const Instance& inst) {
  DecisionResult out;
  Graph g = inst.graph;
  detail::Searcher searcher(g, inst.d, out.stats);
  if (searcher.run(inst.k, 0)) out.solution = Solution{searcher.take_solution()};
  return out;
}

struct MinimumResult {
  std::optional<Solution> solution;  // absent only when k_max was too small
  SearchStats stats;                 // merged over every k tried
  int decisions = 0;
};

// Smallest deletion set, found by deciding k = 0, 1, 2, ... in turn.
inline MinimumResult solve_minimum(const Graph& g, int d,
                                   std::optional<int> k_max = std::nullopt) {
  if (d < 0) throw UsageError("degree bound d must be nonnegative");
  MinimumResult out;
  const int limit = k_max.value_or(g.active_count());
  for (int k = 0; k <= limit; ++k) {
    DecisionResult r = solve_decision(Instance(g, d, k));
    ++out.decisions;
    out.stats.merge(r.stats);
    if (r.solution) {
      out.solution = std::move(r.solution);
      break;
    }
  }
  return out;
}

}  // namespace bddv

#endif  // BDDV_SEARCH_HPP_
