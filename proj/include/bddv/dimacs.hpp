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

#ifndef BDDV_DIMACS_HPP_
#define BDDV_DIMACS_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bddv/graph.hpp"

// DIMACS edge format:
//
//   c free-form comment
//   p edge <n> <m>
//   e <u> <v>          (1-based ids, m lines)
//
// Repeated edges collapse into one; self-loops are rejected.
namespace bddv {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate p-line");
      std::string format;
      long long n = -1, m = -1;
      if (!(fields >> format >> n >> m) || (format != "edge" && format != "edges") ||
          n < 0 || m < 0 || n > 1'000'000) {
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      }
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(lineno, "edge before p-line");
      long long u = 0, v = 0;
      if (!(fields >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
      const long long n = g.vertex_count();
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
      g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(lineno, "trailing text '" + extra + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing p-line");
  return g;
}

inline Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

// Edges in sorted order, 1-based.
inline std::string serialize_dimacs(const Graph& g) {
  auto edges = g.edges();
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace bddv

#endif  // BDDV_DIMACS_HPP_
