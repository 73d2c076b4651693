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
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/graph.hpp"
#include "dirprod/length.hpp"

namespace dirprod {

/// Shortest even and odd walk lengths between a source and one target.
struct ParityEntry {
  WalkLength even;
  WalkLength odd;

  WalkLength of_parity(int parity) const { return parity == 0 ? even : odd; }
  friend bool operator==(const ParityEntry&, const ParityEntry&) = default;
};

/// Shortest even/odd walks from one source to every vertex.
struct ParityRow {
  VertexId source = 0;
  std::vector<ParityEntry> entries;

  const ParityEntry& operator[](VertexId v) const { return entries.at(static_cast<std::size_t>(v)); }
};

/// BFS on the parity double cover: state (v, b) is "reached v by a walk of parity b".
inline ParityRow parity_distances(const Graph& g, VertexId source) {
  const auto n = static_cast<std::size_t>(g.order());
  if (source < 0 || static_cast<std::size_t>(source) >= n)
    throw Error(ErrorCode::BadId, "source " + std::to_string(source));
  std::vector<int> dist(2 * n, kUnreached);
  std::vector<std::size_t> queue;
  queue.reserve(2 * n);
  const auto state = [n](VertexId v, int parity) { return static_cast<std::size_t>(parity) * n + static_cast<std::size_t>(v); };
  dist[state(source, 0)] = 0;
  queue.push_back(state(source, 0));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t s = queue[head];
    const auto v = static_cast<VertexId>(s % n);
    const int parity = static_cast<int>(s / n);
    for (VertexId w : g.neighbors(v)) {
      const std::size_t t = state(w, 1 - parity);
      if (dist[t] == kUnreached) {
        dist[t] = dist[s] + 1;
        queue.push_back(t);
      }
    }
  }
  ParityRow row;
  row.source = source;
  row.entries.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v] != kUnreached) row.entries[v].even = dist[v];
    if (dist[n + v] != kUnreached) row.entries[v].odd = dist[n + v];
  }
  return row;
}

/// Parity rows for every source of a graph.
class ParityTable {
 public:
  ParityTable() = default;
  explicit ParityTable(const Graph& g) {
    rows_.reserve(static_cast<std::size_t>(g.order()));
    for (VertexId s = 0; s < g.order(); ++s) rows_.push_back(parity_distances(g, s));
  }
  const ParityEntry& operator()(VertexId a, VertexId b) const {
    return rows_.at(static_cast<std::size_t>(a))[b];
  }
  int order() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<ParityRow> rows_;
};

namespace detail {
inline WalkLength joint(WalkLength a, WalkLength b) {
  if (!a || !b) return std::nullopt;
  return std::max(*a, *b);
}
inline WalkLength shorter(WalkLength a, WalkLength b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}
}  // namespace detail

/// Product distance in edges: the least n with an n-walk in both factors.
inline WalkLength product_walk_distance(const ParityEntry& first, const ParityEntry& second) {
  return detail::shorter(detail::joint(first.even, second.even), detail::joint(first.odd, second.odd));
}

inline Dist16 product_distance(const ParityEntry& first, const ParityEntry& second) {
  return to_dist16(product_walk_distance(first, second));
}

/// Parity (0 even, 1 odd) of the walks realizing the product distance; nullopt if infinite.
inline std::optional<int> realizing_parity(const ParityEntry& first, const ParityEntry& second) {
  const WalkLength e = detail::joint(first.even, second.even);
  const WalkLength o = detail::joint(first.odd, second.odd);
  if (!e && !o) return std::nullopt;
  if (!o || (e && *e <= *o)) return 0;
  return 1;
}

struct DistanceGap {
  Dist16 product;     ///< distance in the product
  Dist16 factor_max;  ///< max of the two factor distances
};

/// Product distance next to the max of factor distances, which always bounds it from below.
inline DistanceGap lower_bound_gap(const Graph& g1, const Graph& g2, VertexId u, VertexId v,
                                   VertexId u2, VertexId v2) {
  const auto r1 = parity_distances(g1, u);
  const auto r2 = parity_distances(g2, v);
  const auto d1 = bfs_hops(g1, u)[static_cast<std::size_t>(u2)];
  const auto d2 = bfs_hops(g2, v)[static_cast<std::size_t>(v2)];
  DistanceGap gap;
  gap.product = product_distance(r1[u2], r2[v2]);
  gap.factor_max = (d1 == kUnreached || d2 == kUnreached) ? Dist16::infinity()
                                                          : Dist16::edges(std::max(d1, d2));
  return gap;
}

/// Closed-form distance in C_m x P_n between (ring j, path i) and (ring r, path s), 1-based.
inline int cmxpn_distance(int m, int n, int j, int i, int r, int s) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::BadParameter, "m must be odd and >= 3");
  if (n < 1) throw Error(ErrorCode::BadParameter, "n must be >= 1");
  if (j < 1 || j > m || r < 1 || r > m || i < 1 || i > n || s < 1 || s > n)
    throw Error(ErrorCode::BadCoordinate, "coordinate outside C_m x P_n");
  const int path = std::abs(i - s);
  const int ring = std::abs(j - r);
  if (path % 2 == ring % 2) return std::max(path, ring);
  return std::max(path, m - ring);
}

}  // namespace dirprod
