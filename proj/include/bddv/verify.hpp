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

#ifndef BDDV_VERIFY_HPP_
#define BDDV_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bddv/graph.hpp"
#include "bddv/oracle.hpp"
#include "bddv/search.hpp"

// Solver-versus-brute-force sweeps shared by the CLI and the acceptance suite.
namespace bddv {

// Calls fn(g) for every labeled simple graph on n vertices; edge i of the
// lexicographic pair list is present iff bit i of the mask is set.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (pairs.size() > 30) throw UsageError("too many labeled graphs");
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) g.add_edge(pairs[i].first, pairs[i].second);
    fn(g);
  }
}

struct OracleCheckReport {
  std::uint64_t graphs = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t invalid_certificates = 0;
  // Fallback firings on runs with d >= 1.
  std::uint64_t fallback_d_positive = 0;
  SearchStats stats;
  std::map<int, SearchStats> stats_by_d;
  std::vector<std::string> first_failures;

  bool ok() const {
    return mismatches == 0 && invalid_certificates == 0 && fallback_d_positive == 0;
  }

  void note(const std::string& what) {
    if (first_failures.size() < 10) first_failures.push_back(what);
  }
};

namespace detail {

inline std::string describe(const Graph& g, int d, int k) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " d=" << d << " k=" << k << " edges=";
  for (auto [u, v] : g.edges()) os << '(' << u << ',' << v << ')';
  return os.str();
}

}  // namespace detail

// Decision agreement for every k in [0, k_max] on one graph.
inline void check_decisions(const Graph& g, int d, int k_max, OracleCheckReport& rep) {
  const int best = static_cast<int>(brute_force_minimum(g, d).size());
  for (int k = 0; k <= k_max; ++k) {
    DecisionResult r = solve_decision(Instance(g, d, k));
    ++rep.comparisons;
    rep.stats.merge(r.stats);
    rep.stats_by_d[d].merge(r.stats);
    if (d >= 1) rep.fallback_d_positive += r.stats.fallback_count;
    const bool expect = best <= k;
    if (r.solution.has_value() != expect) {
      ++rep.mismatches;
      rep.note("decision mismatch " + detail::describe(g, d, k));
    } else if (r.solution && (static_cast<int>(r.solution->size()) > k ||
                              !validate_solution(g, d, *r.solution))) {
      ++rep.invalid_certificates;
      rep.note("invalid certificate " + detail::describe(g, d, k));
    }
  }
}

// Minimum-size agreement on one graph.
inline void check_minimum(const Graph& g, int d, OracleCheckReport& rep) {
  MinimumResult r = solve_minimum(g, d);
  Solution b = brute_force_minimum(g, d);
  ++rep.comparisons;
  rep.stats.merge(r.stats);
  rep.stats_by_d[d].merge(r.stats);
  if (d >= 1) rep.fallback_d_positive += r.stats.fallback_count;
  if (!r.solution || r.solution->size() != b.size()) {
    ++rep.mismatches;
    rep.note("minimum mismatch " + detail::describe(g, d, static_cast<int>(b.size())));
  } else if (!validate_solution(g, d, *r.solution)) {
    ++rep.invalid_certificates;
    rep.note("invalid certificate " + detail::describe(g, d, static_cast<int>(b.size())));
  }
}

// Every labeled graph with n <= max_n, every d in ds, every k in [0, k_max].
inline OracleCheckReport exhaustive_oracle_check(int max_n, std::span<const int> ds,
                                                 int k_max) {
  OracleCheckReport rep;
  for (int n = 0; n <= max_n; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      ++rep.graphs;
      for (int d : ds) check_decisions(g, d, k_max, rep);
    });
  }
  return rep;
}

struct RandomCheckSpec {
  int count = 500;
  int n_min = 8;
  int n_max = 14;
  std::vector<double> ps{0.2, 0.5, 0.8};
  std::vector<int> ds{2, 3, 4};
  std::uint64_t seed = 1;
};

struct RandomInstance {
  Graph graph;
  int d = 0;
  double p = 0.0;
};

// `count` instances G(n, p): n uniform in [n_min, n_max], p and d drawn from
// the given lists, each graph seeded from one master stream.
inline std::vector<RandomInstance> random_instances(const RandomCheckSpec& spec) {
  if (spec.n_min > spec.n_max || spec.ps.empty() || spec.ds.empty()) {
    throw UsageError("bad random check spec");
  }
  std::vector<RandomInstance> out;
  SplitMix64 master(spec.seed);
  const auto span_n = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
  for (int i = 0; i < spec.count; ++i) {
    const int n = spec.n_min + static_cast<int>(master.below(span_n));
    const double p = spec.ps[master.below(spec.ps.size())];
    const int d = spec.ds[master.below(spec.ds.size())];
    out.push_back({generate({n, p, master.next(), std::nullopt}), d, p});
  }
  return out;
}

inline OracleCheckReport random_oracle_check(const RandomCheckSpec& spec) {
  OracleCheckReport rep;
  for (const RandomInstance& inst : random_instances(spec)) {
    ++rep.graphs;
    check_minimum(inst.graph, inst.d, rep);
  }
  return rep;
}

}  // namespace bddv

#endif  // BDDV_VERIFY_HPP_
