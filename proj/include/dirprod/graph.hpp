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
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/length.hpp"

namespace dirprod {

using VertexId = int;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with unit edge lengths. Immutable once built.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return adj_.empty(); }

  /// Neighbors of v in increasing id order.
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[check(v)]; }
  /// Edge ids parallel to neighbors(v).
  std::span<const int> incident_edges(VertexId v) const { return adj_edge_[check(v)]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[check(v)].size()); }

  /// Edges sorted lexicographically; the index of an edge is its edge id.
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  std::optional<int> edge_id(VertexId a, VertexId b) const {
    if (a < 0 || b < 0 || a >= order() || b >= order()) return std::nullopt;
    const auto& nb = adj_[a];
    const auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return adj_edge_[a][static_cast<std::size_t>(it - nb.begin())];
  }
  bool adjacent(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[check(v)];
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(const std::vector<std::pair<VertexId, VertexId>>& edges, int n,
                           std::vector<std::string> labels);

  std::size_t check(VertexId v) const {
    if (v < 0 || v >= order()) throw Error(ErrorCode::BadId, "vertex " + std::to_string(v));
    return static_cast<std::size_t>(v);
  }

  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<int>> adj_edge_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// Builds a simple graph on vertices [0, n). Loops, repeated pairs and bad ids are rejected.
inline Graph build_graph(const std::vector<std::pair<VertexId, VertexId>>& edges, int n,
                         std::vector<std::string> labels = {}) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::BadParameter, "label count does not match vertex count");
  Graph g;
  g.labels_ = std::move(labels);
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorCode::BadId, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b) throw Error(ErrorCode::LoopEdge, "loop at " + std::to_string(a));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

  std::vector<std::vector<std::pair<VertexId, int>>> tmp(static_cast<std::size_t>(n));
  for (int id = 0; id < static_cast<int>(g.edges_.size()); ++id) {
    const Edge& e = g.edges_[static_cast<std::size_t>(id)];
    tmp[e.u].emplace_back(e.v, id);
    tmp[e.v].emplace_back(e.u, id);
  }
  g.adj_.resize(static_cast<std::size_t>(n));
  g.adj_edge_.resize(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < tmp.size(); ++v) {
    std::sort(tmp[v].begin(), tmp[v].end());
    for (auto [w, id] : tmp[v]) {
      g.adj_[v].push_back(w);
      g.adj_edge_[v].push_back(id);
    }
  }
  return g;
}

inline Graph graph_from_edges(const std::vector<Edge>& edges, int n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return build_graph(pairs, n);
}

// ---------------------------------------------------------------------------
// Shortest paths

/// Marks an unreached vertex in raw hop-count arrays.
inline constexpr int kUnreached = -1;

/// Hop distances from one source; kUnreached for other components.
inline std::vector<int> bfs_hops(const Graph& g, VertexId source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreached);
  std::vector<VertexId> queue;
  queue.reserve(dist.size());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Hop distances to the nearest vertex of a source set.
inline std::vector<int> multi_source_hops(const Graph& g, std::span<const VertexId> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreached);
  std::vector<VertexId> queue;
  for (VertexId s : sources) {
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// All-pairs vertex distances; entries are Dist16 (16 per edge) with infinity across components.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g) : n_(g.order()) {
    hops_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (VertexId s = 0; s < n_; ++s) {
      const auto row = bfs_hops(g, s);
      hops_.insert(hops_.end(), row.begin(), row.end());
    }
  }

  int order() const { return n_; }
  bool connected(VertexId a, VertexId b) const { return raw(a, b) != kUnreached; }
  /// Edge count of a shortest path; the pair must be connected.
  int hops(VertexId a, VertexId b) const {
    const int h = raw(a, b);
    if (h == kUnreached) throw Error(ErrorCode::Disconnected, "vertices in different components");
    return h;
  }
  Dist16 operator()(VertexId a, VertexId b) const {
    const int h = raw(a, b);
    return h == kUnreached ? Dist16::infinity() : Dist16::edges(h);
  }
  /// Raw row access (kUnreached marks other components).
  std::span<const int> row(VertexId a) const {
    return {hops_.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }
  int raw(VertexId a, VertexId b) const {
    return hops_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(b)];
  }

 private:
  int n_ = 0;
  std::vector<int> hops_;
};

inline DistanceMatrix apsp(const Graph& g) { return DistanceMatrix(g); }

// ---------------------------------------------------------------------------
// Points of the metric graph

/// A vertex, or a position strictly inside an edge measured in sixteenths from its lower endpoint.
class Point {
 public:
  Point() = default;

  static Point vertex(VertexId v) {
    Point p;
    p.edge_ = -1;
    p.u_ = p.v_ = v;
    return p;
  }

  /// Point at `offset` sixteenths from `from` toward `to` along their edge.
  static Point on_edge(const Graph& g, VertexId from, VertexId to, int offset) {
    const auto id = g.edge_id(from, to);
    if (!id) throw Error(ErrorCode::BadId, "no edge " + std::to_string(from) + "-" + std::to_string(to));
    if (offset < 0 || offset > 16) throw Error(ErrorCode::BadParameter, "offset outside [0,16]");
    if (offset == 0) return vertex(from);
    if (offset == 16) return vertex(to);
    Point p;
    p.edge_ = *id;
    p.u_ = std::min(from, to);
    p.v_ = std::max(from, to);
    p.offset_ = from < to ? offset : 16 - offset;
    return p;
  }

  static Point midpoint(const Graph& g, VertexId a, VertexId b) { return on_edge(g, a, b, 8); }

  bool is_vertex() const { return edge_ < 0; }
  VertexId vertex_id() const { return u_; }
  int edge_id() const { return edge_; }
  /// Lower endpoint of the carrying edge (the vertex itself for vertex points).
  VertexId lower() const { return u_; }
  VertexId upper() const { return v_; }
  /// Offset in sixteenths from the lower endpoint; 0 for vertex points.
  int offset() const { return offset_; }
  bool is_midpoint() const { return edge_ >= 0 && offset_ == 8; }
  bool on_grid(int step) const { return offset_ % step == 0; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

  std::string str() const {
    if (is_vertex()) return std::to_string(u_);
    return std::to_string(u_) + "-" + std::to_string(v_) + "@" + std::to_string(offset_) + "/16";
  }

 private:
  int edge_ = -1;
  VertexId u_ = 0;
  VertexId v_ = 0;
  int offset_ = 0;
};

/// Distance between two points via the endpoint formula.
inline Dist16 point_distance(const DistanceMatrix& d, const Point& p, const Point& q) {
  auto exits = [](const Point& x) {
    std::vector<std::pair<VertexId, std::int64_t>> out;
    if (x.is_vertex()) {
      out.emplace_back(x.vertex_id(), 0);
    } else {
      out.emplace_back(x.lower(), x.offset());
      out.emplace_back(x.upper(), 16 - x.offset());
    }
    return out;
  };
  if (!p.is_vertex() && !q.is_vertex() && p.edge_id() == q.edge_id())
    return Dist16::sixteenths(std::abs(p.offset() - q.offset()));
  Dist16 best = Dist16::infinity();
  for (auto [a, ca] : exits(p)) {
    for (auto [b, cb] : exits(q)) {
      if (!d.connected(a, b)) continue;
      best = std::min(best, Dist16::sixteenths(ca + 16 * d.hops(a, b) + cb));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Subdivision

/// A graph whose edges were split into `factor` pieces, with the map back to points of the original.
struct Subdivision {
  Graph graph;
  std::vector<Point> points;  ///< new vertex id -> point of the original graph
  int factor = 1;
  int base_order = 0;

  /// Subdivision vertex representing a point; the point must lie on the 16/factor grid.
  VertexId node_of(const Point& p) const {
    if (p.is_vertex()) return p.vertex_id();
    const int step = 16 / factor;
    if (p.offset() % step != 0)
      throw Error(ErrorCode::BadCorner, "point " + p.str() + " is off the subdivision grid");
    return base_order + p.edge_id() * (factor - 1) + p.offset() / step - 1;
  }
};

/// Replaces every edge by a path of k edges; k must be 2, 4, 8 or 16.
inline Subdivision subdivide(const Graph& g, int k) {
  if (k != 1 && k != 2 && k != 4 && k != 8 && k != 16)
    throw Error(ErrorCode::BadParameter, "subdivision factor must be 2, 4, 8 or 16");
  const int n = g.order();
  const int inner = k - 1;
  Subdivision s;
  s.factor = k;
  s.base_order = n;
  const int total = n + g.size() * inner;
  s.points.reserve(static_cast<std::size_t>(total));
  for (VertexId v = 0; v < n; ++v) s.points.push_back(Point::vertex(v));
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(g.size()) * static_cast<std::size_t>(k));
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    VertexId prev = e.u;
    for (int t = 1; t <= inner; ++t) {
      const VertexId node = n + id * inner + t - 1;
      s.points.push_back(Point::on_edge(g, e.u, e.v, t * 16 / k));
      edges.emplace_back(prev, node);
      prev = node;
    }
    edges.emplace_back(prev, e.v);
  }
  s.graph = build_graph(edges, total);
  return s;
}

// ---------------------------------------------------------------------------
// Structure

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<VertexId>> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

struct Bipartition {
  std::vector<int> color;  ///< 0 or 1 per vertex; the smallest vertex of each component gets 0
  std::vector<VertexId> side0;
  std::vector<VertexId> side1;
};

/// Two-coloring, or nullopt if some component has an odd cycle.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  Bipartition b;
  b.color.assign(static_cast<std::size_t>(g.order()), -1);
  for (VertexId s = 0; s < g.order(); ++s) {
    if (b.color[s] >= 0) continue;
    b.color[s] = 0;
    std::vector<VertexId> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId w : g.neighbors(u)) {
        if (b.color[w] < 0) {
          b.color[w] = 1 - b.color[u];
          queue.push_back(w);
        } else if (b.color[w] == b.color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v = 0; v < g.order(); ++v) (b.color[v] == 0 ? b.side0 : b.side1).push_back(v);
  return b;
}

/// Induced subgraph on `keep` (any order); returns the graph and new -> old ids (sorted).
inline std::pair<Graph, std::vector<VertexId>> induced_subgraph(const Graph& g,
                                                                std::vector<VertexId> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  return {build_graph(edges, static_cast<int>(keep.size())), keep};
}

/// Largest vertex-to-vertex distance; infinity if disconnected.
inline Dist16 diam_vertices(const Graph& g) {
  int best = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    for (int h : bfs_hops(g, s)) {
      if (h == kUnreached) return Dist16::infinity();
      best = std::max(best, h);
    }
  }
  return Dist16::edges(best);
}

/// Largest distance between arbitrary points. Extremes sit on vertices or edge midpoints, so
/// this is half the vertex diameter of the twofold subdivision.
inline Dist16 diam_continuous(const Graph& g) {
  const Dist16 d = diam_vertices(subdivide(g, 2).graph);
  if (d.is_infinite()) return d;
  return Dist16::sixteenths(d.value() / 2);
}

}  // namespace dirprod
