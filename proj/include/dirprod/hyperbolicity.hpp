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
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/graph.hpp"
#include "dirprod/length.hpp"
#include "dirprod/parallel.hpp"

namespace dirprod {

/// A polyline through points of the metric graph; consecutive points share a closed edge.
using PointPath = std::vector<Point>;

/// Geodesic triangle: corners x, y, z and sides [xy], [yz], [zx].
struct Triangle {
  std::array<Point, 3> corners;
  std::array<PointPath, 3> sides;
};

/// Thin constant of a triangle together with the side point realizing it.
struct ThinResult {
  Dist16 value;
  int side = 0;
  Point point;
};

namespace detail {

inline int position_on_edge(const Edge& e, const Point& p) {
  if (p.is_vertex()) return p.vertex_id() == e.u ? 0 : 16;
  return p.offset();
}

inline std::vector<int> carrying_edges(const Graph& g, const Point& p) {
  if (!p.is_vertex()) return {p.edge_id()};
  const auto ids = g.incident_edges(p.vertex_id());
  return {ids.begin(), ids.end()};
}

/// Nodes of the sixteenth subdivision traversed by a point polyline.
inline std::vector<VertexId> polyline_nodes(const Graph& g, const Subdivision& s16,
                                            const PointPath& side, int side_index) {
  if (side.empty()) throw NotAGeodesic(side_index);
  std::vector<VertexId> nodes{s16.node_of(side.front())};
  for (std::size_t i = 1; i < side.size(); ++i) {
    const Point& a = side[i - 1];
    const Point& b = side[i];
    if (a == b) continue;
    const auto ea = carrying_edges(g, a);
    const auto eb = carrying_edges(g, b);
    int common = -1;
    for (int e : ea) {
      if (std::find(eb.begin(), eb.end(), e) != eb.end()) {
        common = e;
        break;
      }
    }
    if (common < 0) throw NotAGeodesic(side_index);
    const Edge& e = g.edge(common);
    const int from = position_on_edge(e, a);
    const int to = position_on_edge(e, b);
    const int step = from < to ? 1 : -1;
    for (int t = from + step;; t += step) {
      VertexId node = 0;
      if (t == 0) {
        node = e.u;
      } else if (t == 16) {
        node = e.v;
      } else {
        node = s16.base_order + common * 15 + t - 1;
      }
      nodes.push_back(node);
      if (t == to) break;
    }
  }
  return nodes;
}

}  // namespace detail

/// Exact thin constant of an explicit triangle. Corners must lie on the eighth grid (vertices
/// and midpoints qualify); the distance to the other sides is then maximized at sixteenth-grid
/// nodes, which are all evaluated.
inline ThinResult thin_constant(const Graph& g, const Triangle& t) {
  for (const Point& c : t.corners) {
    if (!c.on_grid(2)) throw Error(ErrorCode::BadCorner, "corner " + c.str() + " is off the eighth grid");
  }
  const Subdivision s16 = subdivide(g, 16);
  std::array<std::vector<VertexId>, 3> nodes;
  for (int i = 0; i < 3; ++i) {
    const PointPath& side = t.sides[static_cast<std::size_t>(i)];
    const Point& a = t.corners[static_cast<std::size_t>(i)];
    const Point& b = t.corners[static_cast<std::size_t>((i + 1) % 3)];
    if (side.empty()) throw NotAGeodesic(i);
    const bool forward = side.front() == a && side.back() == b;
    const bool backward = side.front() == b && side.back() == a;
    if (!forward && !backward) throw NotAGeodesic(i);
    auto& ns = nodes[static_cast<std::size_t>(i)];
    ns = detail::polyline_nodes(g, s16, side, i);
    const int d = bfs_hops(s16.graph, ns.front())[static_cast<std::size_t>(ns.back())];
    if (d == kUnreached || d != static_cast<int>(ns.size()) - 1) throw NotAGeodesic(i);
  }
  ThinResult best;
  best.value = Dist16::sixteenths(-1);
  for (int i = 0; i < 3; ++i) {
    std::vector<VertexId> others = nodes[static_cast<std::size_t>((i + 1) % 3)];
    const auto& third = nodes[static_cast<std::size_t>((i + 2) % 3)];
    others.insert(others.end(), third.begin(), third.end());
    const auto dist = multi_source_hops(s16.graph, others);
    for (VertexId node : nodes[static_cast<std::size_t>(i)]) {
      const Dist16 v = Dist16::sixteenths(dist[static_cast<std::size_t>(node)]);
      if (v > best.value) {
        best.value = v;
        best.side = i;
        best.point = s16.points[static_cast<std::size_t>(node)];
      }
    }
  }
  return best;
}

/// Builds a point polyline from a vertex path.
inline PointPath to_point_path(const std::vector<VertexId>& vertices) {
  PointPath out;
  out.reserve(vertices.size());
  for (VertexId v : vertices) out.push_back(Point::vertex(v));
  return out;
}

// ---------------------------------------------------------------------------
// Hyperbolicity constant

enum class DeltaMode { exact, lower_bound, upper_bound };

constexpr std::string_view to_string(DeltaMode m) {
  switch (m) {
    case DeltaMode::exact: return "exact";
    case DeltaMode::lower_bound: return "lower-bound";
    case DeltaMode::upper_bound: return "upper-bound";
  }
  return "unknown";
}

inline constexpr std::uint64_t kDefaultTriangleBudget = 10'000'000;

struct DeltaOptions {
  /// Maximum number of corner triples (x, y, z) scored along side [xy].
  std::uint64_t triangle_budget = kDefaultTriangleBudget;
  /// Skip corner pairs and side points that provably cannot beat the current best.
  bool prune = true;
  int jobs = 1;
};

struct DeltaResult {
  Dist16 delta;
  DeltaMode mode = DeltaMode::exact;
  /// Realizing triangle; the witness point lies on side 0 ([xy]).
  Triangle witness;
  Point witness_point;
  std::uint64_t evaluations = 0;
};

namespace detail {

/// Exact thin-triangle search on one connected graph.
///
/// Work happens on the fourfold subdivision K, where corners in J are vertices and every maximum
/// of a distance-to-sides function is attained at a vertex. For a side point p the best choice of
/// the two remaining sides is independent per side, so
///   value(x, y, z) = max over p on a geodesic x..y of min(F(p; y, z), F(p; z, x)),
/// where F(p; a, b) is the largest min-distance to p over all shortest a-b paths. F comes from a
/// max-min dynamic program over the shortest-path DAG rooted at a.
class ThinSearch {
 public:
  struct Best {
    int value = -1;  // in quarter edges
    std::size_t pair = 0;
    VertexId p = 0;
    std::size_t z = 0;
  };

  ThinSearch(const Graph& g, bool vertex_corners, int jobs)
      : g_(g), k_(subdivide(g, 4)), nk_(static_cast<std::size_t>(k_.graph.order())), jobs_(jobs) {
    if (nk_ > 30000) throw Error(ErrorCode::ResourceLimit, "graph too large for the exact engine");
    for (VertexId v = 0; v < g.order(); ++v) corners_.push_back(v);
    if (!vertex_corners) {
      for (int e = 0; e < g.size(); ++e) corners_.push_back(g.order() + 3 * e + 1);
    }
    nj_ = corners_.size();
    for (std::size_t x = 0; x < nj_; ++x)
      for (std::size_t y = x; y < nj_; ++y) pairs_.emplace_back(x, y);
  }

  std::uint64_t unpruned_evaluations() const { return pairs_.size() * nj_; }

  /// Full search; `budget` caps scored triples, nullopt means unlimited. Returns false if the
  /// budget stopped the scan early.
  bool run(bool prune, std::uint64_t& budget_left, bool limited) {
    prepare();
    if (!limited) {
      const std::size_t block = 64;
      const std::size_t blocks = (pairs_.size() + block - 1) / block;
      std::vector<Best> results(blocks);
      std::vector<std::uint64_t> evals(blocks, 0);
      std::atomic<int> shared{-1};
      parallel_for(blocks, jobs_, [&](std::size_t b) {
        const std::size_t lo = b * block;
        const std::size_t hi = std::min(pairs_.size(), lo + block);
        std::uint64_t unused = std::numeric_limits<std::uint64_t>::max();
        scan(lo, hi, prune, results[b], evals[b], shared, unused);
      });
      for (std::size_t b = 0; b < blocks; ++b) {
        evaluations_ += evals[b];
        if (results[b].value > best_.value) best_ = results[b];
      }
      return true;
    }
    std::atomic<int> shared{-1};
    return scan(0, pairs_.size(), prune, best_, evaluations_, shared, budget_left);
  }

  const Best& best() const { return best_; }
  std::uint64_t evaluations() const { return evaluations_; }
  const Subdivision& subdivision() const { return k_; }

  /// Vertex paths in K forming the witness triangle sides [xy], [yz], [zx].
  std::array<std::vector<VertexId>, 3> witness_paths() const {
    const auto [xi, yi] = pairs_[best_.pair];
    const VertexId x = corners_[xi];
    const VertexId y = corners_[yi];
    const VertexId z = corners_[best_.z];
    const VertexId p = best_.p;
    std::array<std::vector<VertexId>, 3> sides;
    auto xp = shortest_path(x, p);
    auto py = shortest_path(p, y);
    xp.insert(xp.end(), py.begin() + 1, py.end());
    sides[0] = std::move(xp);
    const int target = best_.value;
    sides[1] = bottleneck_path(y, z, p, target);
    auto xz = bottleneck_path(x, z, p, target);
    std::reverse(xz.begin(), xz.end());
    sides[2] = std::move(xz);
    return sides;
  }

 private:
  int dk(VertexId a, VertexId b) const { return dk_[static_cast<std::size_t>(a) * nk_ + static_cast<std::size_t>(b)]; }

  void prepare() {
    if (!dk_.empty()) return;
    if (nk_ * nj_ * nj_ > (std::size_t{1} << 31))
      throw Error(ErrorCode::ResourceLimit, "thin-triangle table would exceed memory limits");
    dk_.resize(nk_ * nk_);
    parallel_for(nk_, jobs_, [&](std::size_t s) {
      const auto row = bfs_hops(k_.graph, static_cast<VertexId>(s));
      for (std::size_t t = 0; t < nk_; ++t) {
        if (row[t] > std::numeric_limits<std::uint16_t>::max() - 1)
          throw Error(ErrorCode::ResourceLimit, "distance overflow");
        dk_[s * nk_ + t] = static_cast<std::uint16_t>(row[t]);
      }
    });
    far_.resize(nk_ * nj_ * nj_);
    parallel_for(nj_, jobs_, [&](std::size_t ai) { fill_far(ai); });
  }

  /// DAG of shortest paths from a: BFS order plus predecessor lists.
  struct Dag {
    std::vector<VertexId> order;
    std::vector<std::size_t> start;
    std::vector<VertexId> preds;
  };

  Dag dag_from(VertexId a) const {
    Dag d;
    d.order.reserve(nk_);
    for (std::size_t v = 0; v < nk_; ++v) d.order.push_back(static_cast<VertexId>(v));
    std::stable_sort(d.order.begin(), d.order.end(),
                     [&](VertexId u, VertexId v) { return dk(a, u) < dk(a, v); });
    d.start.push_back(0);
    for (VertexId v : d.order) {
      for (VertexId w : k_.graph.neighbors(v))
        if (dk(a, w) + 1 == dk(a, v)) d.preds.push_back(w);
      d.start.push_back(d.preds.size());
    }
    return d;
  }

  /// best[v] = largest min over shortest a-v paths of the distance to p.
  void bottleneck(const Dag& dag, VertexId p, std::vector<std::uint16_t>& best) const {
    const std::uint16_t* dp = dk_.data() + static_cast<std::size_t>(p) * nk_;
    for (std::size_t i = 0; i < dag.order.size(); ++i) {
      const VertexId v = dag.order[i];
      if (dag.start[i] == dag.start[i + 1]) {  // the root
        best[v] = dp[v];
        continue;
      }
      std::uint16_t m = 0;
      for (std::size_t k = dag.start[i]; k < dag.start[i + 1]; ++k) m = std::max(m, best[dag.preds[k]]);
      best[v] = std::min(dp[v], m);
    }
  }

  void fill_far(std::size_t ai) {
    const Dag dag = dag_from(corners_[ai]);
    std::vector<std::uint16_t> best(nk_);
    for (std::size_t p = 0; p < nk_; ++p) {
      bottleneck(dag, static_cast<VertexId>(p), best);
      std::uint16_t* row = far_.data() + (p * nj_ + ai) * nj_;
      for (std::size_t bi = 0; bi < nj_; ++bi) row[bi] = best[static_cast<std::size_t>(corners_[bi])];
    }
  }

  bool scan(std::size_t lo, std::size_t hi, bool prune, Best& best, std::uint64_t& evals,
            std::atomic<int>& shared, std::uint64_t& budget_left) const {
    for (std::size_t pi = lo; pi < hi; ++pi) {
      const auto [xi, yi] = pairs_[pi];
      const VertexId x = corners_[xi];
      const VertexId y = corners_[yi];
      const int span = dk(x, y);
      if (prune) {
        const int bound = span / 2;
        if (bound <= best.value || bound < shared.load(std::memory_order_relaxed)) continue;
      }
      if (budget_left < nj_) return false;
      budget_left -= nj_;
      evals += nj_;
      for (std::size_t p = 0; p < nk_; ++p) {
        const int to_x = dk(static_cast<VertexId>(p), x);
        const int to_y = dk(static_cast<VertexId>(p), y);
        if (to_x + to_y != span) continue;
        if (prune) {
          const int cap = std::min(to_x, to_y);
          if (cap <= best.value || cap < shared.load(std::memory_order_relaxed)) continue;
        }
        const std::uint16_t* fy = far_.data() + (p * nj_ + yi) * nj_;
        const std::uint16_t* fx = far_.data() + (p * nj_ + xi) * nj_;
        for (std::size_t zi = 0; zi < nj_; ++zi) {
          const int v = std::min(fy[zi], fx[zi]);
          if (v > best.value) {
            best = {v, pi, static_cast<VertexId>(p), zi};
            int cur = shared.load(std::memory_order_relaxed);
            while (v > cur && !shared.compare_exchange_weak(cur, v)) {
            }
          }
        }
      }
    }
    return true;
  }

  std::vector<VertexId> shortest_path(VertexId a, VertexId b) const {
    std::vector<VertexId> path{b};
    VertexId cur = b;
    while (cur != a) {
      for (VertexId w : k_.graph.neighbors(cur)) {
        if (dk(a, w) + 1 == dk(a, cur)) {
          cur = w;
          break;
        }
      }
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  /// Shortest a-b path staying at distance >= target from p.
  std::vector<VertexId> bottleneck_path(VertexId a, VertexId b, VertexId p, int target) const {
    const Dag dag = dag_from(a);
    std::vector<std::uint16_t> best(nk_);
    bottleneck(dag, p, best);
    if (best[static_cast<std::size_t>(b)] < target) throw std::logic_error("bottleneck witness lost");
    std::vector<VertexId> path{b};
    VertexId cur = b;
    while (cur != a) {
      VertexId next = -1;
      for (VertexId w : k_.graph.neighbors(cur)) {
        if (dk(a, w) + 1 == dk(a, cur) && best[static_cast<std::size_t>(w)] >= target) {
          next = w;
          break;
        }
      }
      if (next < 0) throw std::logic_error("bottleneck witness lost");
      cur = next;
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  const Graph& g_;
  Subdivision k_;
  std::size_t nk_;
  int jobs_;
  std::vector<VertexId> corners_;
  std::size_t nj_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::uint16_t> dk_;
  std::vector<std::uint16_t> far_;
  Best best_;
  std::uint64_t evaluations_ = 0;
};

inline Point lift_point(const Graph& g, const std::vector<VertexId>& to_original, const Point& p) {
  if (p.is_vertex()) return Point::vertex(to_original[static_cast<std::size_t>(p.vertex_id())]);
  return Point::on_edge(g, to_original[static_cast<std::size_t>(p.lower())],
                        to_original[static_cast<std::size_t>(p.upper())], p.offset());
}

inline DeltaResult search_delta(const Graph& g, const DeltaOptions& opt, bool vertex_corners) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "hyperbolicity of an empty graph");
  struct Part {
    Graph graph;
    std::vector<VertexId> to_original;
  };
  std::vector<Part> parts;
  for (auto& comp : components(g)) {
    auto [sub, map] = induced_subgraph(g, comp);
    parts.push_back({std::move(sub), std::move(map)});
  }
  std::vector<ThinSearch> searches;
  searches.reserve(parts.size());
  std::uint64_t total = 0;
  for (const Part& part : parts) {
    searches.emplace_back(part.graph, vertex_corners, opt.jobs);
    total += searches.back().unpruned_evaluations();
  }
  const bool limited = total > opt.triangle_budget;
  std::uint64_t budget_left = opt.triangle_budget;
  bool complete = true;
  int best_value = -1;
  std::size_t best_part = 0;
  DeltaResult result;
  for (std::size_t i = 0; i < searches.size(); ++i) {
    if (!complete) break;
    complete = searches[i].run(opt.prune, budget_left, limited);
    result.evaluations += searches[i].evaluations();
    if (searches[i].best().value > best_value) {
      best_value = searches[i].best().value;
      best_part = i;
    }
  }
  result.mode = complete ? DeltaMode::exact : DeltaMode::lower_bound;
  if (best_value < 0) {
    // Budget exhausted before anything was scored.
    result.delta = Dist16::sixteenths(0);
    result.witness.corners = {Point::vertex(0), Point::vertex(0), Point::vertex(0)};
    for (auto& s : result.witness.sides) s = {Point::vertex(0)};
    result.witness_point = Point::vertex(0);
    return result;
  }
  result.delta = Dist16::sixteenths(4 * best_value);

  const ThinSearch& s = searches[best_part];
  const Part& part = parts[best_part];
  const auto paths = s.witness_paths();
  for (int i = 0; i < 3; ++i) {
    PointPath side;
    for (VertexId node : paths[static_cast<std::size_t>(i)])
      side.push_back(lift_point(g, part.to_original, s.subdivision().points[static_cast<std::size_t>(node)]));
    result.witness.sides[static_cast<std::size_t>(i)] = std::move(side);
  }
  result.witness.corners = {result.witness.sides[0].front(), result.witness.sides[0].back(),
                            result.witness.sides[1].back()};
  result.witness_point = lift_point(g, part.to_original,
                                    s.subdivision().points[static_cast<std::size_t>(s.best().p)]);
  if (vertex_corners && complete && best_value % 2 != 0)
    throw std::logic_error("vertex-corner constant is not a multiple of 1/2");
  return result;
}

}  // namespace detail

/// Exact hyperbolicity constant: corners range over vertices and edge midpoints, sides over all
/// geodesics. Disconnected graphs report the largest component value.
inline DeltaResult delta_exact(const Graph& g, const DeltaOptions& opt = {}) {
  return detail::search_delta(g, opt, false);
}

/// Thin constant over triangles with corners at vertices.
inline DeltaResult delta_vertex(const Graph& g, const DeltaOptions& opt = {}) {
  return detail::search_delta(g, opt, true);
}

/// Half the largest continuous component diameter.
inline Dist16 delta_upper_diam(const Graph& g) {
  std::int64_t best = 0;
  for (auto& comp : components(g)) {
    const Dist16 d = diam_continuous(induced_subgraph(g, comp).first);
    best = std::max(best, d.value());
  }
  return Dist16::sixteenths(best / 2);
}

/// Distance from a point to the union of the two sides other than `side`.
inline Dist16 distance_to_other_sides(const Graph& g, const Triangle& t, int side, const Point& p) {
  const Subdivision s16 = subdivide(g, 16);
  std::vector<VertexId> others;
  for (int k = 1; k <= 2; ++k) {
    const int i = (side + k) % 3;
    const auto ns = detail::polyline_nodes(g, s16, t.sides[static_cast<std::size_t>(i)], i);
    others.insert(others.end(), ns.begin(), ns.end());
  }
  const auto dist = multi_source_hops(s16.graph, others);
  const int v = dist[static_cast<std::size_t>(s16.node_of(p))];
  return v == kUnreached ? Dist16::infinity() : Dist16::sixteenths(v);
}

}  // namespace dirprod
