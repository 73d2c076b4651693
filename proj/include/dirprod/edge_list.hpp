// Copyright 2026 The dirprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/graph.hpp"

namespace dirprod {

// Edge-list text format:
//   # comment
//   n <count>        (optional, defaults to max id + 1)
//   u v              (one edge per line)

inline Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  int declared = -1;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string a;
    ls >> a;
    if (a == "n") {
      if (!(ls >> declared) || declared < 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad header");
      continue;
    }
    VertexId u = 0;
    VertexId v = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad vertex id");
    }
    std::string rest;
    if (!(ls >> v) || (ls >> rest))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  const int n = declared >= 0 ? declared : max_id + 1;
  return build_graph(edges, n);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

/// Writes the header line followed by edges in id order.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace dirprod
