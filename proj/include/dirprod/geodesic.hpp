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
#include <cstdint>
#include <limits>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/graph.hpp"

namespace dirprod {

using VertexPath = std::vector<VertexId>;

inline constexpr std::uint64_t kDefaultGeodesicCap = 10'000;

/// Number of shortest u-v paths, saturating at 2^63.
inline std::uint64_t count_geodesics(const Graph& g, VertexId u, VertexId v) {
  const auto from_u = bfs_hops(g, u);
  if (from_u[static_cast<std::size_t>(v)] == kUnreached)
    throw Error(ErrorCode::Disconnected, "no path between " + std::to_string(u) + " and " + std::to_string(v));
  constexpr std::uint64_t kSat = std::uint64_t{1} << 63;
  std::vector<VertexId> order;
  for (VertexId w = 0; w < g.order(); ++w)
    if (from_u[w] != kUnreached && from_u[w] <= from_u[v]) order.push_back(w);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return from_u[a] < from_u[b]; });
  std::vector<std::uint64_t> count(static_cast<std::size_t>(g.order()), 0);
  count[static_cast<std::size_t>(u)] = 1;
  for (VertexId w : order) {
    if (w == u) continue;
    std::uint64_t c = 0;
    for (VertexId p : g.neighbors(w)) {
      if (from_u[p] == from_u[w] - 1) c = std::min(kSat, c + count[p]);
    }
    count[w] = c;
  }
  return count[static_cast<std::size_t>(v)];
}

/// All shortest u-v vertex paths in lexicographic order. Throws GeodesicBudgetExceeded when
/// there are more than `cap`.
inline std::vector<VertexPath> enumerate_geodesics(const Graph& g, VertexId u, VertexId v,
                                                   std::uint64_t cap = kDefaultGeodesicCap) {
  if (cap < 1) throw Error(ErrorCode::BadParameter, "cap must be >= 1");
  const std::uint64_t total = count_geodesics(g, u, v);
  if (total > cap) throw GeodesicBudgetExceeded(total, cap);
  const auto to_v = bfs_hops(g, v);
  std::vector<VertexPath> out;
  out.reserve(static_cast<std::size_t>(total));
  VertexPath path{u};
  // Depth-first over the shortest-path DAG toward v, neighbors in increasing id.
  auto walk = [&](auto&& self, VertexId at) -> void {
    if (at == v) {
      out.push_back(path);
      return;
    }
    for (VertexId w : g.neighbors(at)) {
      if (to_v[w] == to_v[at] - 1) {
        path.push_back(w);
        self(self, w);
        path.pop_back();
      }
    }
  };
  walk(walk, u);
  return out;
}

/// Checks that consecutive vertices are adjacent.
inline bool is_walk(const Graph& g, const VertexPath& walk) {
  if (walk.empty()) return false;
  for (VertexId v : walk)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 1; i < walk.size(); ++i)
    if (!g.adjacent(walk[i - 1], walk[i])) return false;
  return true;
}

/// A walk whose length equals the distance between its ends.
inline bool is_geodesic(const Graph& g, const VertexPath& walk) {
  if (!is_walk(g, walk)) return false;
  const auto d = bfs_hops(g, walk.front())[static_cast<std::size_t>(walk.back())];
  return d == static_cast<int>(walk.size()) - 1;
}

}  // namespace dirprod
