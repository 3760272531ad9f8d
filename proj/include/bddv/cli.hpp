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

#ifndef BDDV_CLI_HPP_
#define BDDV_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bddv/analysis.hpp"
#include "bddv/dimacs.hpp"
#include "bddv/graph.hpp"
#include "bddv/oracle.hpp"
#include "bddv/search.hpp"
#include "bddv/verify.hpp"

namespace bddv::cli {

enum class Mode { kDecide, kMinimize, kVerifyFactors, kOracleCheck };

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  Mode mode = Mode::kDecide;
  std::optional<std::string> input;
  std::optional<GeneratorSpec> gen;
  std::optional<int> d;
  // Budget for decide; optional cap (k_max) for minimize.
  std::optional<int> k;
  std::optional<std::string> stats_path;
  double tol = kDefaultFactorTolerance;
};

// "n,p,seed"
inline GeneratorSpec parse_gen(const std::string& text) {
  std::istringstream in(text);
  GeneratorSpec spec;
  char c1 = 0, c2 = 0;
  if (!(in >> spec.n >> c1 >> spec.p >> c2 >> spec.seed) || c1 != ',' || c2 != ',') {
    throw UsageError("--gen expects n,p,seed");
  }
  std::string rest;
  if (in >> rest) throw UsageError("--gen expects n,p,seed");
  return spec;
}

// "<tag>" or "<tag>:<x>"
inline Plant parse_plant(const std::string& text, int d) {
  std::string tag = text;
  int x = 0;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    tag = text.substr(0, colon);
    try {
      x = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad plant parameter in '" + text + "'");
    }
  }
  auto kind = parse_plant_kind(tag);
  if (!kind) throw UsageError("unknown plant '" + tag + "'");
  return Plant{*kind, d, x};
}

inline void check_config(const RunConfig& c) {
  const bool solving = c.mode == Mode::kDecide || c.mode == Mode::kMinimize;
  if (solving) {
    if (c.input.has_value() == c.gen.has_value()) {
      throw UsageError("give exactly one of --input or --gen");
    }
    if (!c.d) throw UsageError("--d is required");
    if (c.mode == Mode::kDecide && !c.k) throw UsageError("--k is required for decide");
  } else if (c.input) {
    throw UsageError("--input is only used by decide and minimize");
  }
  if (c.d && *c.d < 0) throw UsageError("--d must be nonnegative");
  if (c.k && *c.k < 0) throw UsageError("--k must be nonnegative");
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
}

inline nlohmann::json stats_to_json(const SearchStats& s) {
  nlohmann::json j;
  j["nodes"] = s.nodes;
  nlohmann::json steps = nlohmann::json::object();
  for (int i = 1; i <= 7; ++i) steps[std::to_string(i)] = s.per_step[i];
  j["per_step"] = steps;
  j["fallback_count"] = s.fallback_count;
  j["violations"] = s.violations;
  j["violation_kinds"] = s.violation_kinds;
  j["max_depth"] = s.max_depth;
  j["close_triple_extra_singletons"] = s.close_triple_extra_singletons;
  auto [factor, origin] = s.max_branching_factor();
  j["max_branching_factor"] = factor;
  j["max_branching_factor_step"] = origin;
  nlohmann::json vecs = nlohmann::json::object();
  for (const auto& [step, m] : s.decrement_vectors) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [v, count] : m) {
      list.push_back({{"decrements", v},
                      {"count", count},
                      {"factor", branching_factor(Recurrence(v)).value}});
    }
    vecs[std::string(structure_name(step))] = list;
  }
  j["decrement_vectors"] = vecs;
  return j;
}

namespace detail {

inline std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

inline void print_vertices(std::ostream& out, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i] + 1;
  out << '\n';
}

inline void write_json(const std::optional<std::string>& path, const nlohmann::json& j) {
  if (!path) return;
  std::ofstream f(*path);
  if (!f) throw std::runtime_error("cannot write " + *path);
  f << j.dump(2) << '\n';
}

inline int run_verify_factors(const RunConfig& c, std::ostream& out) {
  std::vector<int> ds;
  if (c.d) {
    ds.push_back(*c.d);
  } else {
    for (int d = 2; d <= 8; ++d) ds.push_back(d);
  }
  FactorReport rep = verify_factor_claims(ds, c.tol);
  nlohmann::json rows = nlohmann::json::array();
  out << std::left << std::setw(14) << "rule" << std::setw(4) << "d" << std::setw(5) << "x"
      << std::setw(14) << "factor" << std::setw(14) << "closed-form" << std::setw(10)
      << "bound" << "status\n";
  out << std::fixed << std::setprecision(6);
  for (const auto& ch : rep.checks) {
    std::string status = ch.closed_form_ok && ch.bound_ok ? "ok" : "";
    if (!ch.closed_form_ok) status += "CLOSED-FORM-MISMATCH ";
    if (!ch.bound_ok) status += "BOUND-EXCEEDED";
    out << std::setw(14) << ch.rule << std::setw(4) << ch.d << std::setw(5)
        << (ch.x ? std::to_string(*ch.x) : "-") << std::setw(14) << ch.factor
        << std::setw(14) << (ch.closed_form ? fixed(*ch.closed_form, 6) : "-")
        << std::setw(10) << (ch.bound_claimed ? fixed(ch.bound, 4) : "-") << status
        << '\n';
    nlohmann::json row{{"rule", ch.rule},
                       {"d", ch.d},
                       {"factor", ch.factor},
                       {"decrements", ch.recurrence.decrements.size() <= 64
                                          ? nlohmann::json(ch.recurrence.decrements)
                                          : nlohmann::json(nullptr)},
                       {"closed_form_ok", ch.closed_form_ok},
                       {"bound_claimed", ch.bound_claimed},
                       {"bound", ch.bound},
                       {"bound_ok", ch.bound_ok}};
    if (ch.x) row["x"] = *ch.x;
    if (ch.closed_form) {
      row["closed_form"] = *ch.closed_form;
      row["closed_form_is_bound"] = ch.closed_form_is_bound;
    }
    rows.push_back(row);
  }
  out.unsetf(std::ios::fixed);
  out << "closed forms: " << (rep.closed_forms_ok() ? "all match" : "MISMATCHES present")
      << "\nbounds: " << (rep.bounds_ok() ? "all hold" : "VIOLATED") << '\n';
  write_json(c.stats_path, {{"mode", "verify-factors"},
                            {"closed_forms_ok", rep.closed_forms_ok()},
                            {"bounds_ok", rep.bounds_ok()},
                            {"checks", rows}});
  return rep.bounds_ok() ? kExitYes : kExitNo;
}

inline int run_oracle_check(const RunConfig& c, std::ostream& out) {
  OracleCheckReport rep;
  if (c.gen) {
    RandomCheckSpec spec;
    spec.count = 200;
    spec.n_min = spec.n_max = c.gen->n;
    spec.ps = {c.gen->p};
    spec.ds = c.d ? std::vector<int>{*c.d} : std::vector<int>{0, 1, 2, 3};
    spec.seed = c.gen->seed;
    rep = random_oracle_check(spec);
  } else {
    std::vector<int> ds = c.d ? std::vector<int>{*c.d} : std::vector<int>{0, 1, 2, 3};
    rep = exhaustive_oracle_check(5, ds, 5);
  }
  out << "graphs " << rep.graphs << ", comparisons " << rep.comparisons << ", mismatches "
      << rep.mismatches << ", invalid certificates " << rep.invalid_certificates
      << ", fallbacks (d>=1) " << rep.fallback_d_positive << '\n';
  for (const auto& f : rep.first_failures) out << "  " << f << '\n';
  out << (rep.ok() ? "PASS" : "FAIL") << '\n';
  nlohmann::json j = stats_to_json(rep.stats);
  j["mode"] = "oracle-check";
  j["graphs"] = rep.graphs;
  j["comparisons"] = rep.comparisons;
  j["mismatches"] = rep.mismatches;
  j["ok"] = rep.ok();
  write_json(c.stats_path, j);
  return rep.ok() ? kExitYes : kExitNo;
}

}  // namespace detail

// Executes one configured run. Exit codes: 0 = YES / success, 1 = NO,
// 2 = error.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    check_config(c);
    if (c.mode == Mode::kVerifyFactors) return detail::run_verify_factors(c, out);
    if (c.mode == Mode::kOracleCheck) return detail::run_oracle_check(c, out);

    Graph g;
    if (c.input) {
      g = read_dimacs_file(*c.input);
    } else {
      g = generate(*c.gen);
    }
    const int d = *c.d;
    nlohmann::json j;
    j["d"] = d;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    int code = kExitNo;
    SearchStats stats;
    std::optional<Solution> sol;
    if (c.mode == Mode::kDecide) {
      DecisionResult r = solve_decision(Instance(g, d, *c.k));
      stats = r.stats;
      sol = r.solution;
      j["mode"] = "decide";
      j["k"] = *c.k;
      out << (sol ? "YES" : "NO") << '\n';
      if (sol) detail::print_vertices(out, sol->vertices);
    } else {
      MinimumResult r = solve_minimum(g, d, c.k);
      stats = r.stats;
      sol = r.solution;
      j["mode"] = "minimize";
      if (c.k) j["k_max"] = *c.k;
      if (sol) {
        out << sol->size() << '\n';
        detail::print_vertices(out, sol->vertices);
      } else {
        out << "NO\n";
      }
    }
    if (sol) {
      code = kExitYes;
      VertexSet one_based;
      for (Vertex v : sol->vertices) one_based.push_back(v + 1);
      j["solution"] = one_based;
      j["valid"] = validate_solution(g, d, *sol);
    }
    j["result"] = sol ? "YES" : "NO";
    j.update(stats_to_json(stats));
    detail::write_json(c.stats_path, j);
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

// Parses argv and runs. Used by the bddv executable and by tests.
inline int main_entry(int argc, const char* const* argv, std::ostream& out,
                      std::ostream& err) {
  CLI::App app{"Exact solver for bounded-degree vertex deletion"};
  RunConfig c;
  std::string mode = "decide";
  std::string gen_text, plant_text;
  int d = -1, k = -1;
  app.add_option("--mode", mode, "decide | minimize | verify-factors | oracle-check")
      ->check(CLI::IsMember({"decide", "minimize", "verify-factors", "oracle-check"}));
  auto* input = app.add_option("--input", c.input, "DIMACS edge file");
  auto* gen = app.add_option("--gen", gen_text, "generate G(n,p): n,p,seed");
  app.add_option("--plant", plant_text, "plant a structure: <tag>[:<x>]")->needs(gen);
  input->excludes(gen);
  auto* dopt = app.add_option("--d", d, "degree bound");
  auto* kopt = app.add_option("--k", k, "budget (decide) or cap (minimize)");
  app.add_option("--stats", c.stats_path, "write statistics JSON here");
  app.add_option("--tol", c.tol, "branching-factor tolerance");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitYes : kExitError;
  }

  try {
    if (mode == "decide") c.mode = Mode::kDecide;
    else if (mode == "minimize") c.mode = Mode::kMinimize;
    else if (mode == "verify-factors") c.mode = Mode::kVerifyFactors;
    else c.mode = Mode::kOracleCheck;
    if (*dopt) c.d = d;
    if (*kopt) c.k = k;
    if (!gen_text.empty()) {
      GeneratorSpec spec = parse_gen(gen_text);
      if (const char* env = std::getenv("BDDV_SEED"); env != nullptr && *env != '\0') {
        spec.seed = std::stoull(env);
      }
      if (!plant_text.empty()) {
        if (!c.d) throw UsageError("--plant needs --d");
        spec.plant = parse_plant(plant_text, *c.d);
      }
      c.gen = spec;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return run(c, out, err);
}

}  // namespace bddv::cli

#endif  // BDDV_CLI_HPP_
