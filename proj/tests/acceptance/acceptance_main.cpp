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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff every
// selected criterion passes. Run with no arguments for all seven, or with
// criterion numbers to select some.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "bddv/bddv.hpp"
#include "support/definitions.hpp"

namespace {

using namespace bddv;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Thresholds.
constexpr int kExhaustiveMaxN = 6;
constexpr int kExhaustiveMaxK = 6;
constexpr double kExhaustiveSeconds = 600.0;
constexpr double kClosedFormTol = 1e-6;
constexpr double kHeadline = 3.0645;
constexpr double kHeadlineTol = 5e-4;
constexpr int kPlantedCount = 50;
constexpr int kPlantedKMin = 3;
constexpr int kPlantedKMax = 8;
constexpr double kTreeConstant = 10.0;
constexpr double kDegreeTwoVectorBound = 3.0655;
constexpr int kFixtureYes = 20;
constexpr int kFixtureNo = 10;
constexpr double kFixtureSeconds = 1.0;

struct Verdict {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

struct PlantedRun {
  Plant plant;
  int n = 0;
  int k_star = 0;
  std::uint64_t nodes_yes = 0;  // decision tree at k*
  std::uint64_t nodes_no = 0;   // decision tree at k*-1
  bool ok = false;              // answers and certificate checked
  SearchStats stats;
};

// Runs shared between criteria, computed on first use.
class Corpus {
 public:
  const OracleCheckReport& exhaustive() {
    if (!exhaustive_) {
      const std::vector<int> ds{0, 1, 2, 3};
      auto t = Clock::now();
      exhaustive_ = exhaustive_oracle_check(kExhaustiveMaxN, ds, kExhaustiveMaxK);
      exhaustive_seconds_ = Seconds(t);
    }
    return *exhaustive_;
  }
  double exhaustive_seconds() {
    exhaustive();
    return exhaustive_seconds_;
  }

  const RandomCheckSpec& random_spec() const { return random_spec_; }

  const OracleCheckReport& random() {
    if (!random_) random_ = random_oracle_check(random_spec_);
    return *random_;
  }

  // Planted instances with k* in [kPlantedKMin, kPlantedKMax].
  const std::vector<PlantedRun>& planted(int d) {
    auto it = planted_.find(d);
    if (it == planted_.end()) it = planted_.emplace(d, make_planted(d)).first;
    return it->second;
  }

 private:
  static std::vector<PlantedRun> make_planted(int d) {
    std::vector<Plant> plants;
    for (auto kind : {PlantKind::kHighDegree, PlantKind::kProperDomination,
                      PlantKind::kCloseTriple, PlantKind::kType1Cycle,
                      PlantKind::kType1Path, PlantKind::kType2Quad}) {
      plants.push_back({kind, d, 0});
    }
    for (int x = 1; x <= d - 2; ++x) plants.push_back({PlantKind::kGoodPair, d, x});
    for (int x = 0; x <= d - 1; ++x) plants.push_back({PlantKind::kProperTriple, d, x});

    std::vector<PlantedRun> out;
    SplitMix64 rng(0xacce97 + static_cast<std::uint64_t>(d));
    for (std::size_t i = 0; out.size() < kPlantedCount; ++i) {
      const Plant pl = plants[i % plants.size()];
      const int n = std::min(kBruteForceMaxVertices,
                             plant_size(pl) + 4 + static_cast<int>(rng.below(6)));
      const double p = 0.25 + 0.35 * rng.uniform();
      Graph g = generate({n, p, rng.next(), pl});
      const int k_star = static_cast<int>(brute_force_minimum(g, d).size());
      if (k_star < kPlantedKMin || k_star > kPlantedKMax) continue;

      PlantedRun run;
      run.plant = pl;
      run.n = n;
      run.k_star = k_star;
      DecisionResult yes = solve_decision(Instance(g, d, k_star));
      DecisionResult no = solve_decision(Instance(g, d, k_star - 1));
      run.nodes_yes = yes.stats.nodes;
      run.nodes_no = no.stats.nodes;
      run.ok = yes.solution && !no.solution &&
               static_cast<int>(yes.solution->size()) <= k_star &&
               validate_solution(g, d, *yes.solution);
      run.stats = yes.stats;
      run.stats.merge(no.stats);
      out.push_back(std::move(run));
    }
    return out;
  }

  std::optional<OracleCheckReport> exhaustive_;
  double exhaustive_seconds_ = 0.0;
  RandomCheckSpec random_spec_;
  std::optional<OracleCheckReport> random_;
  std::map<int, std::vector<PlantedRun>> planted_;
};

void AddFailures(Verdict& v, const OracleCheckReport& rep) {
  for (const auto& f : rep.first_failures) v.details.push_back(f);
}

Verdict ExhaustiveEquivalence(Corpus& c) {
  const auto& rep = c.exhaustive();
  const double secs = c.exhaustive_seconds();
  Verdict v;
  v.pass = rep.mismatches == 0 && rep.invalid_certificates == 0 && secs < kExhaustiveSeconds;
  std::ostringstream os;
  os << "exhaustive oracle equivalence: " << rep.graphs << " graphs (n<=" << kExhaustiveMaxN
     << "), d 0..3, k 0.." << kExhaustiveMaxK << ": " << rep.comparisons << " decisions, "
     << rep.mismatches << " mismatches, " << rep.invalid_certificates
     << " invalid certificates, " << secs << " s (limit " << kExhaustiveSeconds << " s)";
  v.summary = os.str();
  AddFailures(v, rep);
  return v;
}

Verdict RandomEquivalence(Corpus& c) {
  const auto& rep = c.random();
  Verdict v;
  v.pass = rep.graphs == 500 && rep.mismatches == 0 && rep.invalid_certificates == 0;
  std::ostringstream os;
  os << "randomized oracle equivalence: " << rep.graphs
     << " instances G(n in [8,14], p in {0.2,0.5,0.8}), d in {2,3,4}: " << rep.mismatches
     << " minimum-size mismatches, " << rep.invalid_certificates << " invalid sets";
  v.summary = os.str();
  AddFailures(v, rep);
  return v;
}

Verdict FactorClosedForms(Corpus&) {
  const std::vector<int> ds{2, 3, 4, 5, 6, 7, 8};
  FactorReport rep = verify_factor_claims(ds);
  Verdict v;
  int closed = 0, bounds = 0;
  for (const auto& ch : rep.checks) {
    if (ch.closed_form) ++closed;
    if (ch.bound_claimed) ++bounds;
    if (ch.closed_form_ok && ch.bound_ok) continue;
    std::ostringstream os;
    os.precision(10);
    os << ch.rule << " d=" << ch.d;
    if (ch.x) os << " x=" << *ch.x;
    os << ": root " << ch.factor;
    if (ch.closed_form) os << ", closed form " << *ch.closed_form;
    if (ch.bound_claimed) os << ", bound " << ch.bound;
    if (!ch.closed_form_ok) os << " [closed form off by " << std::abs(ch.factor - *ch.closed_form) << "]";
    if (!ch.bound_ok) os << " [bound exceeded]";
    v.details.push_back(os.str());
  }
  v.pass = rep.closed_forms_ok() && rep.bounds_ok();
  std::ostringstream os;
  os << "factor closed forms (tol " << kClosedFormTol << ") and d+1 bounds for d 2..8: "
     << closed << " closed-form rows, " << bounds << " bound rows, " << rep.failures().size()
     << " failing";
  v.summary = os.str();
  return v;
}

Verdict Headline(Corpus&) {
  const double f = branching_factor(Recurrence({1, 2, 2, 2, 2, 2, 2, 3})).value;
  Verdict v;
  v.pass = std::abs(f - kHeadline) <= kHeadlineTol;
  std::ostringstream os;
  os.precision(8);
  os << "d=2 headline factor [1,2x6,3] = " << f << " (target " << kHeadline << " +- "
     << kHeadlineTol << ")";
  v.summary = os.str();
  return v;
}

Verdict TreeSize(Corpus& c) {
  Verdict v;
  const auto& runs = c.planted(3);
  bool ok = static_cast<int>(runs.size()) == kPlantedCount;
  double worst_ratio = 0.0;
  std::map<int, int> by_k;
  for (const auto& r : runs) {
    const double limit = kTreeConstant * std::pow(4.0, r.k_star);
    const double ratio = std::max(r.nodes_yes, r.nodes_no) / limit;
    worst_ratio = std::max(worst_ratio, ratio);
    ++by_k[r.k_star];
    if (!r.ok || ratio > 1.0) {
      ok = false;
      v.details.push_back(std::string(plant_name(r.plant.kind)) + " n=" + std::to_string(r.n) +
                          " k*=" + std::to_string(r.k_star) + " nodes " +
                          std::to_string(r.nodes_yes) + "/" + std::to_string(r.nodes_no) +
                          (r.ok ? "" : " wrong answer"));
    }
  }

  // Measured decrement vectors: d=3 planted, d=2 planted, and the random
  // corpus (d in {2,3,4}).
  std::map<int, SearchStats> by_d;
  for (const auto& r : runs) by_d[3].merge(r.stats);
  for (const auto& r : c.planted(2)) by_d[2].merge(r.stats);
  for (const auto& [d, s] : c.random().stats_by_d) by_d[d].merge(s);
  std::ostringstream factors;
  factors.precision(6);
  std::size_t vectors = 0;
  for (const auto& [d, s] : by_d) {
    const double bound = d == 2 ? kDegreeTwoVectorBound : d + 1.0;
    for (const auto& [step, vecs] : s.decrement_vectors) {
      for (const auto& [vec, count] : vecs) {
        ++vectors;
        const double f = branching_factor(Recurrence(vec)).value;
        if (f > bound + kClosedFormTolerance) {
          ok = false;
          std::ostringstream os;
          os << "d=" << d << " " << structure_name(step) << " vector of " << vec.size()
             << " branches has factor " << f << " > " << bound;
          v.details.push_back(os.str());
        }
      }
    }
    auto [f, step] = s.max_branching_factor();
    factors << " d=" << d << ":" << f << "(" << (step < 0 ? "-" : structure_name(step)) << ")";
  }

  std::ostringstream os;
  os.precision(4);
  os << "tree size: " << runs.size() << " planted d=3 instances, k* in";
  for (auto [k, n] : by_k) os << " " << k << "x" << n;
  os << ", worst nodes / (10*4^k*) = " << worst_ratio << "; " << vectors
     << " measured vectors, max factor" << factors.str();
  v.summary = os.str();
  v.pass = ok;
  return v;
}

Verdict StructureCoverage(Corpus& c) {
  Verdict v;
  std::uint64_t fallbacks = c.exhaustive().fallback_d_positive + c.random().fallback_d_positive;
  std::uint64_t violations = 0;
  for (const auto& [d, s] : c.exhaustive().stats_by_d)
    if (d >= 1) violations += s.violations;
  for (const auto& [d, s] : c.random().stats_by_d) violations += s.violations;
  for (int d : {2, 3}) {
    for (const auto& r : c.planted(d)) {
      fallbacks += r.stats.fallback_count;
      violations += r.stats.violations;
    }
  }

  std::uint64_t scans = 0, disagreements = 0;
  auto compare = [&](const Graph& g, int d) {
    ++scans;
    auto a = testing::compare_detectors(g, d);
    if (!a.ok) {
      if (++disagreements <= 5) {
        v.details.push_back("detector level " + std::to_string(a.step) + " disagrees, d=" +
                            std::to_string(d) + " n=" + std::to_string(g.vertex_count()));
      }
    }
  };
  for (int n = 0; n <= kExhaustiveMaxN; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      for (int d = 0; d <= 3; ++d) compare(g, d);
    });
  for (const auto& inst : random_instances(c.random_spec())) compare(inst.graph, inst.d);

  v.pass = fallbacks == 0 && disagreements == 0;
  std::ostringstream os;
  os << "structure coverage: fallback count " << fallbacks << " over all d>=1 runs ("
     << violations << " assumption violations); detector-vs-definition scans " << scans
     << ", " << disagreements << " disagreements";
  v.summary = os.str();
  return v;
}

struct FixtureRow {
  std::string file;
  int d = 0, k = 0;
  bool yes = false;
};

std::vector<FixtureRow> ReadManifest(const std::string& dir) {
  std::ifstream in(dir + "/manifest.tsv");
  if (!in) throw std::runtime_error("cannot open " + dir + "/manifest.tsv");
  std::vector<FixtureRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    FixtureRow r;
    std::string expected;
    fields >> r.file >> r.d >> r.k >> expected;
    r.yes = expected == "YES";
    rows.push_back(r);
  }
  return rows;
}

Verdict CliRoundTrip(Corpus&) {
  Verdict v;
  const std::string dir = BDDV_FIXTURE_DIR;
  int yes_ok = 0, no_ok = 0, yes_total = 0, no_total = 0;
  double slowest = 0.0;
  for (const auto& row : ReadManifest(dir)) {
    const std::string path = dir + "/" + row.file;
    const std::string cmd = std::string(BDDV_CLI_PATH) + " --input " + path + " --d " +
                            std::to_string(row.d) + " --k " + std::to_string(row.k) +
                            " 2>&1";
    auto t = Clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    const double secs = Seconds(t);
    slowest = std::max(slowest, secs);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    bool ok = secs < kFixtureSeconds;
    if (row.yes) {
      ++yes_total;
      std::istringstream lines(out);
      std::string verdict, ids;
      std::getline(lines, verdict);
      std::getline(lines, ids);
      VertexSet cert;
      std::istringstream id_stream(ids);
      for (long long id; id_stream >> id;) cert.push_back(static_cast<Vertex>(id - 1));
      Graph g = read_dimacs_file(path);
      ok = ok && code == 0 && verdict == "YES" &&
           static_cast<int>(cert.size()) <= row.k && validate_solution(g, row.d, cert);
      yes_ok += ok;
    } else {
      ++no_total;
      ok = ok && code == 1 && out == "NO\n";
      no_ok += ok;
    }
    if (!ok) {
      v.details.push_back(row.file + ": exit " + std::to_string(code) + " in " +
                          std::to_string(secs) + " s");
    }
  }
  v.pass = yes_total == kFixtureYes && no_total == kFixtureNo && yes_ok == yes_total &&
           no_ok == no_total;
  std::ostringstream os;
  os << "CLI round trip: " << yes_ok << "/" << yes_total << " YES fixtures with valid certificates, "
     << no_ok << "/" << no_total << " NO fixtures, slowest " << slowest << " s (limit "
     << kFixtureSeconds << " s)";
  v.summary = os.str();
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict(Corpus&)>> criteria = {
      ExhaustiveEquivalence, RandomEquivalence, FactorClosedForms, Headline,
      TreeSize,              StructureCoverage,   CliRoundTrip};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::cerr << "usage: acceptance [criterion 1..7 ...]\n";
      return 2;
    }
    selected.insert(id);
  }
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.insert(i);

  Corpus corpus;
  bool all = true;
  for (int id : selected) {
    Verdict v;
    auto t = Clock::now();
    try {
      v = criteria[id - 1](corpus);
    } catch (const std::exception& e) {
      v.pass = false;
      v.summary = std::string("threw: ") + e.what();
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << id << "] " << v.summary << " ("
              << Seconds(t) << " s)\n";
    for (const auto& d : v.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
