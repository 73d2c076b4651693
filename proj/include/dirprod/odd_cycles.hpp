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
#include <optional>
#include <set>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/geodesic.hpp"
#include "dirprod/graph.hpp"
#include "dirprod/length.hpp"

namespace dirprod {

/// A shortcut of a cycle together with the odd cycle it produces.
struct Reduction {
  VertexPath shortcut;  ///< walk meeting the cycle only at its endpoints
  VertexPath arc;       ///< retained subarc, from the shortcut's end back to its start
  std::vector<VertexId> cycle;
};

struct CycleCertificate {
  std::vector<VertexId> vertices;
  int length = 0;
  bool odd = false;
  bool isometric = false;
  std::optional<Reduction> reduction;

  bool minimal() const { return odd && !reduction; }
};

/// Rotation starting at the smallest vertex, direction chosen so the second entry is smaller
/// than the last.
inline std::vector<VertexId> canonical_cycle(std::vector<VertexId> c) {
  if (c.size() < 3) return c;
  const auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

inline void validate_cycle(const Graph& g, const std::vector<VertexId>& c) {
  if (c.size() < 3) throw Error(ErrorCode::BadCycle, "a cycle needs at least three vertices");
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const VertexId v = c[i];
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::BadCycle, "vertex out of range");
    if (!seen.insert(v).second) throw Error(ErrorCode::BadCycle, "repeated vertex " + std::to_string(v));
    if (!g.adjacent(v, c[(i + 1) % c.size()]))
      throw Error(ErrorCode::BadCycle, "missing edge at position " + std::to_string(i));
  }
}

/// Length of the shortest odd cycle; nullopt when the graph is bipartite.
inline std::optional<int> odd_girth(const Graph& g) {
  std::optional<int> best;
  for (VertexId s = 0; s < g.order(); ++s) {
    const auto d = bfs_hops(g, s);
    for (const Edge& e : g.edges()) {
      const int du = d[static_cast<std::size_t>(e.u)];
      if (du != kUnreached && du == d[static_cast<std::size_t>(e.v)]) {
        const int len = 2 * du + 1;
        if (!best || len < *best) best = len;
      }
    }
  }
  return best;
}

/// Some shortest odd cycle, canonicalized; nullopt when bipartite.
inline std::optional<std::vector<VertexId>> shortest_odd_cycle(const Graph& g) {
  const auto girth = odd_girth(g);
  if (!girth) return std::nullopt;
  for (VertexId s = 0; s < g.order(); ++s) {
    const auto d = bfs_hops(g, s);
    for (const Edge& e : g.edges()) {
      const int du = d[static_cast<std::size_t>(e.u)];
      if (du == kUnreached || du != d[static_cast<std::size_t>(e.v)] || 2 * du + 1 != *girth) continue;
      // Walk back from both ends; a shortest odd closed walk is a simple cycle.
      auto back = [&](VertexId v) {
        std::vector<VertexId> path{v};
        while (v != s) {
          for (VertexId w : g.neighbors(v)) {
            if (d[static_cast<std::size_t>(w)] + 1 == d[static_cast<std::size_t>(v)]) {
              v = w;
              break;
            }
          }
          path.push_back(v);
        }
        return path;
      };
      auto left = back(e.u);
      const auto right = back(e.v);
      std::reverse(left.begin(), left.end());
      left.insert(left.end(), right.begin(), right.end() - 1);
      std::set<VertexId> distinct(left.begin(), left.end());
      if (distinct.size() == left.size()) return canonical_cycle(left);
    }
  }
  return std::nullopt;
}

/// True iff the cycle metric agrees with the graph metric on the cycle's vertices.
inline bool is_isometric_cycle(const Graph& g, const std::vector<VertexId>& c) {
  validate_cycle(g, c);
  const std::size_t len = c.size();
  for (std::size_t i = 0; i < len; ++i) {
    const auto d = bfs_hops(g, c[i]);
    for (std::size_t j = i + 1; j < len; ++j) {
      const std::size_t along = std::min(j - i, len - (j - i));
      if (d[static_cast<std::size_t>(c[j])] != static_cast<int>(along)) return false;
    }
  }
  return true;
}

/// Shortest shortcut (then lexicographically smallest) and the odd cycle it yields, or nullopt
/// when the cycle is minimal. Only paths are searched: a shortest shortcut never repeats a vertex.
inline std::optional<Reduction> reduce_cycle(const Graph& g, const std::vector<VertexId>& c) {
  validate_cycle(g, c);
  const std::size_t len = c.size();
  if (len % 2 == 0) throw Error(ErrorCode::EvenCycle, "reduction needs an odd cycle");
  std::vector<char> on_cycle(static_cast<std::size_t>(g.order()), 0);
  for (VertexId v : c) on_cycle[static_cast<std::size_t>(v)] = 1;

  std::optional<std::pair<std::size_t, std::size_t>> best_pos;
  VertexPath best_path;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const std::size_t along = std::min(j - i, len - (j - i));
      if (along < 2) continue;
      const VertexId u = c[i];
      const VertexId v = c[j];
      // BFS from v avoiding other cycle vertices, then walk from u greedily toward v.
      std::vector<int> dv(static_cast<std::size_t>(g.order()), kUnreached);
      std::vector<VertexId> queue{v};
      dv[static_cast<std::size_t>(v)] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const VertexId x = queue[h];
        for (VertexId y : g.neighbors(x)) {
          if (dv[static_cast<std::size_t>(y)] != kUnreached) continue;
          if (on_cycle[static_cast<std::size_t>(y)] && y != u) continue;
          dv[static_cast<std::size_t>(y)] = dv[static_cast<std::size_t>(x)] + 1;
          if (y != u) queue.push_back(y);
        }
      }
      const int ell = dv[static_cast<std::size_t>(u)];
      if (ell == kUnreached || ell >= static_cast<int>(along)) continue;
      VertexPath path{u};
      VertexId cur = u;
      while (cur != v) {
        for (VertexId y : g.neighbors(cur)) {
          if (dv[static_cast<std::size_t>(y)] + 1 == dv[static_cast<std::size_t>(cur)] &&
              dv[static_cast<std::size_t>(y)] != kUnreached) {
            cur = y;
            break;
          }
        }
        path.push_back(cur);
      }
      const bool better = !best_pos || path.size() < best_path.size() ||
                          (path.size() == best_path.size() && path < best_path);
      if (better) {
        best_pos = {{i, j}};
        best_path = std::move(path);
      }
    }
  }
  if (!best_pos) return std::nullopt;

  const auto [i, j] = *best_pos;
  const int ell = static_cast<int>(best_path.size()) - 1;
  // Arc from c[j] back to c[i], either through the inner positions or around the other side.
  VertexPath inner;
  for (std::size_t k = j + 1; k-- > i;) inner.push_back(c[k]);
  VertexPath outer;
  for (std::size_t k = j; k != i; k = (k + 1) % len) outer.push_back(c[k]);
  outer.push_back(c[i]);
  const bool inner_even = (j - i) % 2 == 0;
  VertexPath arc = (ell % 2 == 0) == inner_even ? outer : inner;

  Reduction r;
  r.shortcut = best_path;
  r.arc = arc;
  std::vector<VertexId> cyc(best_path.begin(), best_path.end());
  cyc.insert(cyc.end(), arc.begin() + 1, arc.end() - 1);
  r.cycle = canonical_cycle(std::move(cyc));
  return r;
}

/// Full certificate for a cycle.
inline CycleCertificate certify_cycle(const Graph& g, const std::vector<VertexId>& c) {
  validate_cycle(g, c);
  CycleCertificate cert;
  cert.vertices = canonical_cycle(c);
  cert.length = static_cast<int>(c.size());
  cert.odd = c.size() % 2 == 1;
  cert.isometric = is_isometric_cycle(g, c);
  if (cert.odd) cert.reduction = reduce_cycle(g, c);
  return cert;
}

/// Default enumeration bound: an isometric cycle of length L has continuous diameter at least
/// L/2, so twice the largest component diameter suffices.
inline int default_cycle_bound(const Graph& g) {
  std::int64_t best = 0;
  for (auto& comp : components(g)) {
    const Dist16 d = diam_continuous(induced_subgraph(g, comp).first);
    best = std::max(best, d.value());
  }
  return static_cast<int>(std::min<std::int64_t>(g.order(), 2 * best / 16));
}

/// All minimal (isometric odd) cycles of length at most `lmax`, sorted by length and then
/// lexicographically by canonical vertex sequence.
inline std::vector<CycleCertificate> minimal_cycles(const Graph& g, std::optional<int> lmax = std::nullopt) {
  const int bound = lmax ? *lmax : default_cycle_bound(g);
  std::vector<CycleCertificate> out;
  if (bound < 3) return out;
  const DistanceMatrix d = apsp(g);
  std::vector<VertexId> path;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);

  auto close = [&]() {
    const std::size_t len = path.size();
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        const std::size_t along = std::min(j - i, len - (j - i));
        if (d.raw(path[i], path[j]) != static_cast<int>(along)) return;
      }
    }
    CycleCertificate cert;
    cert.vertices = path;
    cert.length = static_cast<int>(len);
    cert.odd = true;
    cert.isometric = true;
    out.push_back(std::move(cert));
  };

  auto extend = [&](auto&& self) -> void {
    const VertexId s = path.front();
    const VertexId cur = path.back();
    const int pos = static_cast<int>(path.size()) - 1;
    for (VertexId v : g.neighbors(cur)) {
      if (v == s && path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back()) close();
      if (v <= s || used[static_cast<std::size_t>(v)]) continue;
      const int i = pos + 1;
      if (i + 1 > bound) continue;
      if (i + d.raw(v, s) > bound) continue;
      bool ok = true;
      const int reach = (i + 1) / 2;
      for (int j = std::max(0, i - reach); j < i && ok; ++j)
        ok = d.raw(path[static_cast<std::size_t>(j)], v) == i - j;
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      self(self);
      path.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };

  for (VertexId s = 0; s < g.order(); ++s) {
    path = {s};
    used[static_cast<std::size_t>(s)] = 1;
    extend(extend);
    used[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end(), [](const CycleCertificate& a, const CycleCertificate& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.vertices < b.vertices;
  });
  return out;
}

/// Distance from every vertex to the union of all minimal cycles; infinity if there are none.
inline std::vector<Dist16> dist_to_minimal_cycles(const Graph& g, std::optional<int> lmax = std::nullopt) {
  std::vector<VertexId> sources;
  for (const auto& c : minimal_cycles(g, lmax)) sources.insert(sources.end(), c.vertices.begin(), c.vertices.end());
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  std::vector<Dist16> out;
  const auto hops = multi_source_hops(g, sources);
  out.reserve(hops.size());
  for (int h : hops) out.push_back(h == kUnreached ? Dist16::infinity() : Dist16::edges(h));
  return out;
}

/// Shortest odd cycle through `v` with length at most `limit`, by bounded search.
inline std::optional<std::vector<VertexId>> shortest_odd_cycle_through(const Graph& g, VertexId v, int limit) {
  const auto dv = bfs_hops(g, v);
  std::optional<std::vector<VertexId>> best;
  int cap = limit;
  std::vector<VertexId> path{v};
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  used[static_cast<std::size_t>(v)] = 1;
  auto dfs = [&](auto&& self) -> void {
    const VertexId cur = path.back();
    const int len = static_cast<int>(path.size());
    for (VertexId w : g.neighbors(cur)) {
      if (w == v && len >= 3 && len % 2 == 1 && len <= cap) {
        best = canonical_cycle(path);
        cap = len - 2;
        continue;
      }
      if (used[static_cast<std::size_t>(w)]) continue;
      if (len + dv[static_cast<std::size_t>(w)] > cap) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  dfs(dfs);
  return best;
}

}  // namespace dirprod
