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
#include <string>
#include <utility>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/geodesic.hpp"
#include "dirprod/graph.hpp"
#include "dirprod/hyperbolicity.hpp"
#include "dirprod/length.hpp"
#include "dirprod/odd_cycles.hpp"
#include "dirprod/parity.hpp"
#include "dirprod/product.hpp"

namespace dirprod {

/// Measured quasi-isometry constants of a map.
///
/// The map is an (alpha, beta) embedding iff beta >= beta_at(alpha); beta_at is nonincreasing in
/// alpha, so the trade-off curve is fully described by the distinct (domain, image) distance pairs
/// kept in `profile`.
struct QiReport {
  /// Distinct (domain distance, image distance) pairs in sixteenths.
  std::vector<std::pair<std::int64_t, std::int64_t>> profile;
  Rational alpha{1};  ///< least admissible alpha (always 1 for finite maps)
  Rational beta;      ///< beta_at(alpha)
  /// Least alpha with beta = 0; nullopt if the map collapses two distinct points.
  std::optional<Rational> zero_beta_alpha;
  /// Largest distance from a codomain vertex to the image; nullopt means infinity.
  std::optional<Rational> epsilon;
  /// False when some pair has a finite distance on exactly one side.
  bool embedding_ok = true;

  Rational beta_at(Rational a) const {
    Rational best{0};
    for (auto [d, i] : profile) {
      const Rational dx(d, 16);
      const Rational dy(i, 16);
      best = std::max(best, dy - a * dx);
      best = std::max(best, dx / a - dy);
    }
    return best;
  }

  /// True iff the map is an (a, b)-quasi-isometric embedding.
  bool within(Rational a, Rational b) const { return embedding_ok && beta_at(a) <= b; }
  bool full_within(Rational e) const { return epsilon && *epsilon <= e; }
};

namespace detail {

inline void finish_report(QiReport& r, std::set<std::pair<std::int64_t, std::int64_t>>& pairs) {
  r.profile.assign(pairs.begin(), pairs.end());
  r.alpha = Rational(1);
  r.beta = r.beta_at(r.alpha);
  Rational worst{1};
  bool collapsed = false;
  for (auto [d, i] : r.profile) {
    if (d == 0 && i == 0) continue;
    if (i == 0) {
      collapsed = true;
      continue;
    }
    if (d == 0) {
      collapsed = true;
      continue;
    }
    worst = std::max(worst, std::max(Rational(i, d), Rational(d, i)));
  }
  if (!collapsed) r.zero_beta_alpha = worst;
}

/// Largest hop distance from a vertex in `targets` (all vertices if empty) to `sources`.
inline std::optional<Rational> vertex_fullness(const Graph& g, const std::vector<VertexId>& sources,
                                               const std::vector<VertexId>& targets) {
  const auto h = multi_source_hops(g, sources);
  int worst = 0;
  auto visit = [&](VertexId v) {
    const int d = h[static_cast<std::size_t>(v)];
    if (d == kUnreached) return false;
    worst = std::max(worst, d);
    return true;
  };
  if (targets.empty()) {
    for (VertexId v = 0; v < g.order(); ++v)
      if (!visit(v)) return std::nullopt;
  } else {
    for (VertexId v : targets)
      if (!visit(v)) return std::nullopt;
  }
  return Rational(worst);
}

}  // namespace detail

/// Exact constants of a vertex map by scanning all pairs. `codomain` restricts the fullness
/// measurement to the given vertices (e.g. one component); empty means every vertex.
inline QiReport qi_constants(const Graph& g1, const Graph& g2, const std::vector<VertexId>& f,
                             const std::vector<VertexId>& codomain = {}) {
  if (static_cast<int>(f.size()) != g1.order()) throw Error(ErrorCode::BadParameter, "map is not total");
  for (VertexId y : f)
    if (y < 0 || y >= g2.order()) throw Error(ErrorCode::BadId, "map target " + std::to_string(y));
  const DistanceMatrix d1 = apsp(g1);
  std::vector<std::vector<int>> d2(static_cast<std::size_t>(g2.order()));
  QiReport r;
  std::set<std::pair<std::int64_t, std::int64_t>> pairs;
  for (VertexId x = 0; x < g1.order(); ++x) {
    auto& row = d2[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])];
    if (row.empty()) row = bfs_hops(g2, f[static_cast<std::size_t>(x)]);
    for (VertexId y = x + 1; y < g1.order(); ++y) {
      const int a = d1.raw(x, y);
      const int b = row[static_cast<std::size_t>(f[static_cast<std::size_t>(y)])];
      if ((a == kUnreached) != (b == kUnreached)) {
        r.embedding_ok = false;
        continue;
      }
      if (a == kUnreached) continue;
      pairs.emplace(16 * a, 16 * b);
    }
  }
  detail::finish_report(r, pairs);
  std::vector<VertexId> image(f.begin(), f.end());
  r.epsilon = detail::vertex_fullness(g2, image, codomain);
  return r;
}

// ---------------------------------------------------------------------------
// Extension to the metric graph

/// Vertex whose image a point of the domain takes: the nearest endpoint, ties to the lower id.
inline VertexId nearest_vertex(const Point& p) {
  if (p.is_vertex()) return p.vertex_id();
  return p.offset() <= 8 ? p.lower() : p.upper();
}

struct ExtensionReport {
  /// Constants of the extension measured on the quarter grid of the domain.
  QiReport qi;
  /// Continuous fullness: sup over codomain points of the distance to the image.
  std::optional<Rational> fullness;
};

/// Extends a vertex map to points (g(x) = f(nearest vertex)) and measures it on the quarter grid.
/// `codomain` restricts the fullness measurement as in qi_constants.
inline ExtensionReport extend_vertex_map(const Graph& g1, const Graph& g2, const std::vector<VertexId>& f,
                                         const std::vector<VertexId>& codomain = {}) {
  if (static_cast<int>(f.size()) != g1.order()) throw Error(ErrorCode::BadParameter, "map is not total");
  const Subdivision grid = subdivide(g1, 4);
  const DistanceMatrix d1 = apsp(g1);
  const DistanceMatrix d2 = apsp(g2);
  ExtensionReport out;
  std::set<std::pair<std::int64_t, std::int64_t>> pairs;
  const auto& pts = grid.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const VertexId fi = f[static_cast<std::size_t>(nearest_vertex(pts[i]))];
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const VertexId fj = f[static_cast<std::size_t>(nearest_vertex(pts[j]))];
      const Dist16 a = point_distance(d1, pts[i], pts[j]);
      const bool b_finite = d2.connected(fi, fj);
      if (a.is_finite() != b_finite) {
        out.qi.embedding_ok = false;
        continue;
      }
      if (!b_finite) continue;
      pairs.emplace(a.value(), 16 * static_cast<std::int64_t>(d2.hops(fi, fj)));
    }
  }
  detail::finish_report(out.qi, pairs);
  std::vector<VertexId> image(f.begin(), f.end());
  out.qi.epsilon = detail::vertex_fullness(g2, image, codomain);
  // Along an edge the distance to the image is a tent peaking at (h_u + h_v + 1) / 2.
  std::vector<char> inside(static_cast<std::size_t>(g2.order()), codomain.empty() ? 1 : 0);
  for (VertexId v : codomain) inside[static_cast<std::size_t>(v)] = 1;
  const auto h = multi_source_hops(g2, image);
  std::int64_t worst = 0;
  for (VertexId v = 0; v < g2.order(); ++v) {
    if (!inside[static_cast<std::size_t>(v)]) continue;
    if (h[static_cast<std::size_t>(v)] == kUnreached) return out;
    worst = std::max<std::int64_t>(worst, 2 * h[static_cast<std::size_t>(v)]);
  }
  for (const Edge& e : g2.edges())
    if (inside[static_cast<std::size_t>(e.u)] && inside[static_cast<std::size_t>(e.v)])
      worst = std::max<std::int64_t>(worst, h[static_cast<std::size_t>(e.u)] + h[static_cast<std::size_t>(e.v)] + 1);
  out.fullness = Rational(worst, 2);
  return out;
}

// ---------------------------------------------------------------------------
// Maps into products

/// A vertex map between two explicit graphs.
struct Construction {
  Graph domain;
  Graph codomain;
  std::vector<VertexId> map;
  /// Codomain vertices over which fullness is measured; empty means all.
  std::vector<VertexId> target;
};

/// w -> (w, v0) into G1 x G2 with v0 on a shortest odd cycle of G2.
inline Construction odd_factor_embedding(const Graph& g1, const Graph& g2) {
  const auto cycle = shortest_odd_cycle(g2);
  if (!cycle) throw Error(ErrorCode::NoOddCycle, "second factor has no odd cycle");
  const VertexId v0 = cycle->front();
  Product p = direct_product(g1, g2);
  Construction c{g1, std::move(p.graph), {}, {}};
  for (VertexId w = 0; w < g1.order(); ++w) c.map.push_back(p.index.id(w, v0));
  return c;
}

/// Parity-aware embedding of a connected bipartite G1 into the component of (w0, v1) in G1 x G2,
/// where [v1, v2] is an edge of the bipartite G2.
inline Construction bipartite_embedding(const Graph& g1, const Graph& g2, VertexId w0 = 0,
                                        std::optional<Edge> edge = std::nullopt) {
  if (!is_bipartite(g1) || !is_bipartite(g2)) throw Error(ErrorCode::NotBipartite, "both factors must be bipartite");
  if (!is_connected(g1)) throw Error(ErrorCode::Disconnected, "first factor must be connected");
  if (g2.size() == 0) throw Error(ErrorCode::BadParameter, "second factor needs an edge");
  const Edge e = edge ? *edge : g2.edges().front();
  if (!g2.adjacent(e.u, e.v)) throw Error(ErrorCode::BadParameter, "not an edge of the second factor");
  Product p = direct_product(g1, g2);
  const auto d = bfs_hops(g1, w0);
  Construction c{g1, p.graph, {}, {}};
  for (VertexId w = 0; w < g1.order(); ++w)
    c.map.push_back(p.index.id(w, d[static_cast<std::size_t>(w)] % 2 == 0 ? e.u : e.v));
  const auto reach = bfs_hops(p.graph, p.index.id(w0, e.u));
  for (VertexId x = 0; x < p.graph.order(); ++x)
    if (reach[static_cast<std::size_t>(x)] != kUnreached) c.target.push_back(x);
  return c;
}

/// Inclusion of G1 x [w1, w2] (presented as G1 x P2) into G1 x G2.
inline Construction edge_inclusion(const Graph& g1, const Graph& g2, std::optional<Edge> edge = std::nullopt) {
  if (!is_bipartite(g2)) throw Error(ErrorCode::NotBipartite, "second factor must be bipartite");
  if (g2.size() == 0) throw Error(ErrorCode::BadParameter, "second factor needs an edge");
  const Edge e = edge ? *edge : g2.edges().front();
  if (!g2.adjacent(e.u, e.v)) throw Error(ErrorCode::BadParameter, "not an edge of the second factor");
  const Graph p2 = build_graph({{0, 1}}, 2);
  Product dom = direct_product(g1, p2);
  Product cod = direct_product(g1, g2);
  Construction c{std::move(dom.graph), std::move(cod.graph), {}, {}};
  for (VertexId x = 0; x < c.domain.order(); ++x) {
    const auto [w, i] = dom.index.coords(x);
    c.map.push_back(cod.index.id(w, i == 0 ? e.u : e.v));
  }
  return c;
}

/// Vertices of the lift of a walk into G1 x P2 (id = 2w + i, i = 0 for v1). Variant 1 starts at
/// (w0, v1) and alternates; variant 2 swaps the second coordinate throughout.
inline std::vector<VertexId> lift_gamma(const Graph& g1, const VertexPath& walk, int variant) {
  if (variant != 1 && variant != 2) throw Error(ErrorCode::BadParameter, "variant must be 1 or 2");
  if (!is_walk(g1, walk)) throw Error(ErrorCode::NotAWalk, "input is not a walk");
  std::vector<VertexId> out;
  out.reserve(walk.size());
  for (std::size_t j = 0; j < walk.size(); ++j) {
    const int i = static_cast<int>(j % 2) ^ (variant == 2 ? 1 : 0);
    out.push_back(2 * walk[j] + i);
  }
  return out;
}

/// Swaps the P2 coordinate of a vertex of G1 x P2.
inline VertexId swap_p2(VertexId x) { return x ^ 1; }

struct LiftDistanceCheck {
  int k = 0;
  int j = 0;
  /// Distance in G1 x P2 between (w0, v1) and the opposite-parity lift of wk.
  std::int64_t lhs = 0;
  /// Distance from w_j to the union of minimal cycles.
  std::int64_t dist = 0;
  Dist16 delta;
  bool strict_holds = false;  ///< lhs^2 > dist
  bool lower_holds = false;  ///< (k + sqrt(dist)) / 2 <= lhs
  bool upper_holds = false;  ///< lhs <= k + 2 dist + 4 delta
  bool holds() const { return strict_holds && lower_holds && upper_holds; }
};

/// Checks the lift-distance inequalities for a geodesic w0..wk and index j. `cycle_distance` and
/// `delta` may be supplied to avoid recomputation.
inline LiftDistanceCheck check_lift_distance(const Graph& g1, const VertexPath& geodesic, int j,
                              std::optional<std::vector<Dist16>> cycle_distance = std::nullopt,
                              std::optional<Dist16> delta = std::nullopt) {
  if (!odd_girth(g1)) throw Error(ErrorCode::NoOddCycle, "graph has no odd cycle");
  if (!is_geodesic(g1, geodesic)) throw Error(ErrorCode::NotAGeodesic, "input is not a geodesic");
  const int k = static_cast<int>(geodesic.size()) - 1;
  if (j < 0 || j > k) throw Error(ErrorCode::BadParameter, "index outside the geodesic");
  const auto dist = cycle_distance ? std::move(*cycle_distance) : dist_to_minimal_cycles(g1);
  const Dist16 dj = dist.at(static_cast<std::size_t>(geodesic[static_cast<std::size_t>(j)]));
  if (dj.is_infinite()) throw Error(ErrorCode::NoOddCycle, "component has no minimal cycle");
  LiftDistanceCheck c;
  c.k = k;
  c.j = j;
  c.dist = dj.value() / 16;
  c.delta = delta ? *delta : delta_exact(g1).delta;
  // A walk of parity different from k realizes the distance between the two lifts.
  const ParityRow row = parity_distances(g1, geodesic.front());
  const WalkLength walk = row[geodesic.back()].of_parity(1 - k % 2);
  if (!walk) throw Error(ErrorCode::NoOddCycle, "no walk of the opposite parity");
  c.lhs = *walk;
  c.strict_holds = c.lhs * c.lhs > c.dist;
  const std::int64_t slack = 2 * c.lhs - k;
  c.lower_holds = slack >= 0 && slack * slack >= c.dist;
  c.upper_holds = 16 * c.lhs <= 16 * k + 32 * c.dist + 4 * c.delta.value();
  return c;
}

/// Direct product distance between the two lifted endpoints, via an explicit product graph.
inline Dist16 lifted_endpoint_distance(const Graph& g1, const VertexPath& geodesic) {
  const Graph p2 = build_graph({{0, 1}}, 2);
  const Product p = direct_product(g1, p2);
  const int k = static_cast<int>(geodesic.size()) - 1;
  const VertexId a = p.index.id(geodesic.front(), 0);
  const VertexId b = p.index.id(geodesic.back(), k % 2 == 1 ? 0 : 1);
  const int h = bfs_hops(p.graph, a)[static_cast<std::size_t>(b)];
  return h == kUnreached ? Dist16::infinity() : Dist16::edges(h);
}

// ---------------------------------------------------------------------------
// Ball collapses

struct BallSpec {
  VertexId center = 0;
  int radius = 1;
};

struct CollapseResult {
  Graph graph;                   ///< G1*: kept vertices first (ascending), then one star per ball
  std::vector<VertexId> map;     ///< G1 vertex -> G1* vertex
  std::vector<VertexId> kept;    ///< G1* vertex -> G1 vertex for the kept part
  std::vector<VertexId> stars;   ///< star vertex of each ball
  int max_radius = 0;            ///< K
};

namespace detail {

struct BallLayout {
  std::vector<int> ball_of;  ///< -1 outside every open ball
  std::vector<std::vector<VertexId>> boundary;
  std::vector<VertexId> kept;
  int max_radius = 0;
};

inline BallLayout layout_balls(const Graph& g1, const std::vector<BallSpec>& balls) {
  BallLayout L;
  const auto n = static_cast<std::size_t>(g1.order());
  L.ball_of.assign(n, -1);
  std::vector<int> closure(n, -1);
  L.boundary.resize(balls.size());
  for (std::size_t b = 0; b < balls.size(); ++b) {
    const BallSpec& s = balls[b];
    if (s.center < 0 || s.center >= g1.order()) throw Error(ErrorCode::BadId, "ball center out of range");
    if (s.radius < 1) throw Error(ErrorCode::BadParameter, "ball radius must be positive");
    L.max_radius = std::max(L.max_radius, s.radius);
    const auto d = bfs_hops(g1, s.center);
    for (std::size_t v = 0; v < n; ++v) {
      if (d[v] == kUnreached || d[v] > s.radius) continue;
      if (closure[v] >= 0)
        throw Error(ErrorCode::OverlappingBalls,
                    "closed balls " + std::to_string(closure[v]) + " and " + std::to_string(b) + " meet");
      closure[v] = static_cast<int>(b);
      if (d[v] < s.radius) {
        L.ball_of[v] = static_cast<int>(b);
      } else {
        L.boundary[b].push_back(static_cast<VertexId>(v));
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (L.ball_of[v] < 0) L.kept.push_back(static_cast<VertexId>(v));
  const Graph rest = induced_subgraph(g1, L.kept).first;
  if (!is_bipartite(rest))
    throw Error(ErrorCode::UncoveredOddCycle, "an odd cycle avoids every ball");
  return L;
}

}  // namespace detail

/// Collapses each open ball to a star vertex joined to the ball's boundary sphere.
inline CollapseResult collapse_balls(const Graph& g1, const std::vector<BallSpec>& balls) {
  const detail::BallLayout L = detail::layout_balls(g1, balls);
  CollapseResult r;
  r.kept = L.kept;
  r.max_radius = L.max_radius;
  std::vector<VertexId> pos(static_cast<std::size_t>(g1.order()), -1);
  for (std::size_t i = 0; i < L.kept.size(); ++i) pos[static_cast<std::size_t>(L.kept[i])] = static_cast<VertexId>(i);
  const int base = static_cast<int>(L.kept.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : g1.edges()) {
    const VertexId a = pos[static_cast<std::size_t>(e.u)];
    const VertexId b = pos[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  for (std::size_t b = 0; b < balls.size(); ++b) {
    const VertexId star = base + static_cast<VertexId>(b);
    r.stars.push_back(star);
    for (VertexId w : L.boundary[b]) edges.emplace_back(pos[static_cast<std::size_t>(w)], star);
  }
  r.graph = build_graph(edges, base + static_cast<int>(balls.size()));
  for (VertexId v = 0; v < g1.order(); ++v) {
    const int b = L.ball_of[static_cast<std::size_t>(v)];
    r.map.push_back(b >= 0 ? base + b : pos[static_cast<std::size_t>(v)]);
  }
  return r;
}

struct MRegularity {
  bool regular = false;
  /// Shortest odd cycle meeting each open ball, if one exists below the bound.
  std::vector<std::optional<std::vector<VertexId>>> witnesses;
  /// Least M for which the family is M-regular; nullopt if some ball meets no odd cycle.
  std::optional<int> least_m;
  std::string reason;
};

/// Every ball must meet an odd cycle shorter than `m` (nullopt: no length limit).
inline MRegularity is_M_regular(const Graph& g1, const std::vector<BallSpec>& balls, std::optional<int> m) {
  MRegularity r;
  if (!odd_girth(g1)) {
    r.reason = "graph has no odd cycles";
    return r;
  }
  detail::layout_balls(g1, balls);
  int worst = 0;
  bool all = true;
  for (const BallSpec& s : balls) {
    const auto d = bfs_hops(g1, s.center);
    std::optional<std::vector<VertexId>> best;
    for (VertexId v = 0; v < g1.order(); ++v) {
      if (d[static_cast<std::size_t>(v)] == kUnreached || d[static_cast<std::size_t>(v)] >= s.radius) continue;
      const int limit = best ? static_cast<int>(best->size()) - 2 : g1.order() - (g1.order() % 2 == 0 ? 1 : 0);
      if (auto c = shortest_odd_cycle_through(g1, v, limit)) best = std::move(c);
    }
    if (best) {
      worst = std::max(worst, static_cast<int>(best->size()));
    } else {
      all = false;
    }
    r.witnesses.push_back(std::move(best));
  }
  if (all) r.least_m = worst + 1;
  if (!all) {
    r.reason = "some ball meets no odd cycle";
  } else if (m && *m < worst + 1) {
    r.reason = "shortest odd cycle meeting some ball has length " + std::to_string(worst) + " >= M";
  } else {
    r.regular = true;
  }
  return r;
}

struct ProductStarResult {
  Graph graph;                ///< G*: kept vertices times P2 ((v, i) at 2 * pos + i), then stars
  std::vector<VertexId> map;  ///< vertex (w, i) of G1 x P2 (id 2w + i) -> G* vertex
  std::vector<VertexId> stars;
  int max_radius = 0;
  int m = 0;
};

/// Collapses every (ball x P2) slab of G1 x P2 to a star vertex. `m` defaults to the least M for
/// which the balls are M-regular.
inline ProductStarResult product_star(const Graph& g1, const std::vector<BallSpec>& balls,
                                      std::optional<int> m = std::nullopt) {
  const detail::BallLayout L = detail::layout_balls(g1, balls);
  const MRegularity reg = is_M_regular(g1, balls, m);
  if (!reg.regular) throw Error(ErrorCode::NotMRegular, reg.reason);
  ProductStarResult r;
  r.max_radius = L.max_radius;
  r.m = m ? *m : *reg.least_m;
  std::vector<VertexId> pos(static_cast<std::size_t>(g1.order()), -1);
  for (std::size_t i = 0; i < L.kept.size(); ++i) pos[static_cast<std::size_t>(L.kept[i])] = static_cast<VertexId>(i);
  const int base = 2 * static_cast<int>(L.kept.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : g1.edges()) {
    const VertexId a = pos[static_cast<std::size_t>(e.u)];
    const VertexId b = pos[static_cast<std::size_t>(e.v)];
    if (a < 0 || b < 0) continue;
    edges.emplace_back(2 * a, 2 * b + 1);
    edges.emplace_back(2 * a + 1, 2 * b);
  }
  for (std::size_t b = 0; b < balls.size(); ++b) {
    const VertexId star = base + static_cast<VertexId>(b);
    r.stars.push_back(star);
    for (VertexId w : L.boundary[b]) {
      edges.emplace_back(2 * pos[static_cast<std::size_t>(w)], star);
      edges.emplace_back(2 * pos[static_cast<std::size_t>(w)] + 1, star);
    }
  }
  r.graph = build_graph(edges, base + static_cast<int>(balls.size()));
  for (VertexId w = 0; w < g1.order(); ++w) {
    const int b = L.ball_of[static_cast<std::size_t>(w)];
    for (int i = 0; i < 2; ++i)
      r.map.push_back(b >= 0 ? base + b : 2 * pos[static_cast<std::size_t>(w)] + i);
  }
  return r;
}

}  // namespace dirprod
