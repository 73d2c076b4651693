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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/graph.hpp"

namespace dirprod {

enum class FamilyKind { path, cycle, complete, complete_bipartite, tree, dumbbell, cycle_with_pendant, random_graph };

/// Parameters per kind:
///   path(a)  cycle(a)  complete(a)  complete_bipartite(a, b)  tree(a, seed)
///   dumbbell(a = bridge length)  cycle_with_pendant(a = cycle, b = tail)  random_graph(a, p, seed)
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int a = 1;
  int b = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

constexpr std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "complete-bipartite";
    case FamilyKind::tree: return "tree";
    case FamilyKind::dumbbell: return "dumbbell";
    case FamilyKind::cycle_with_pendant: return "cycle-with-pendant";
    case FamilyKind::random_graph: return "random";
  }
  return "unknown";
}

inline FamilyKind parse_family_kind(std::string_view s) {
  for (auto k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete, FamilyKind::complete_bipartite,
                 FamilyKind::tree, FamilyKind::dumbbell, FamilyKind::cycle_with_pendant, FamilyKind::random_graph}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::BadParameter, "unknown family '" + std::string(s) + "'");
}

namespace detail {

// Uniform integer in [0, bound) by rejection, so results do not depend on the standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

inline double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

}  // namespace detail

/// P_m: vertices 0..m-1 in order.
inline Graph path_graph(int m) {
  detail::require(m >= 1, "path needs m >= 1");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  return build_graph(e, m);
}

inline Graph cycle_graph(int m) {
  detail::require(m >= 3, "cycle needs m >= 3");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
  return build_graph(e, m);
}

inline Graph complete_graph(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(e, n);
}

/// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite_graph(int a, int b) {
  detail::require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return build_graph(e, a + b);
}

/// Random recursive tree: vertex v > 0 attaches to a uniform earlier vertex.
inline Graph random_tree(int n, std::uint64_t seed) {
  detail::require(n >= 1, "tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int v = 1; v < n; ++v)
    e.emplace_back(static_cast<VertexId>(detail::uniform_below(rng, static_cast<std::uint64_t>(v))), v);
  return build_graph(e, n);
}

/// Triangles {0,1,2} and {L+2, L+3, L+4} joined by the bridge 2, 3, ..., L+2.
inline Graph dumbbell_graph(int bridge) {
  detail::require(bridge >= 1, "dumbbell needs bridge length >= 1");
  const int b0 = 2;
  const int b1 = 2 + bridge;
  std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {1, 2}, {0, 2}};
  for (int i = b0; i < b1; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(b1, b1 + 1);
  e.emplace_back(b1 + 1, b1 + 2);
  e.emplace_back(b1, b1 + 2);
  return build_graph(e, bridge + 5);
}

/// Cycle 0..c-1 with a tail 0, c, c+1, ..., c+t-1.
inline Graph cycle_with_pendant_graph(int c, int t) {
  detail::require(c >= 3 && t >= 0, "cycle with pendant needs c >= 3, t >= 0");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < c; ++i) e.emplace_back(i, (i + 1) % c);
  VertexId prev = 0;
  for (int i = 0; i < t; ++i) {
    e.emplace_back(prev, c + i);
    prev = c + i;
  }
  return build_graph(e, c + t);
}

/// Erdos-Renyi G(n, p); pairs are visited in lexicographic order.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  detail::require(n >= 1 && p >= 0.0 && p <= 1.0, "random graph needs n >= 1 and p in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (detail::unit_interval(rng) < p) e.emplace_back(i, j);
  return build_graph(e, n);
}

inline Graph generate(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::path: return path_graph(s.a);
    case FamilyKind::cycle: return cycle_graph(s.a);
    case FamilyKind::complete: return complete_graph(s.a);
    case FamilyKind::complete_bipartite: return complete_bipartite_graph(s.a, s.b);
    case FamilyKind::tree: return random_tree(s.a, s.seed);
    case FamilyKind::dumbbell: return dumbbell_graph(s.a);
    case FamilyKind::cycle_with_pendant: return cycle_with_pendant_graph(s.a, s.b);
    case FamilyKind::random_graph: return random_graph(s.a, s.p, s.seed);
  }
  throw Error(ErrorCode::BadParameter, "unknown family");
}

}  // namespace dirprod
