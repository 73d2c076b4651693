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
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dirprod/error.hpp"
#include "dirprod/families.hpp"
#include "dirprod/geodesic.hpp"
#include "dirprod/graph.hpp"
#include "dirprod/hyperbolicity.hpp"
#include "dirprod/length.hpp"
#include "dirprod/odd_cycles.hpp"
#include "dirprod/parallel.hpp"
#include "dirprod/parity.hpp"
#include "dirprod/product.hpp"
#include "dirprod/qi.hpp"

namespace dirprod {

using json = nlohmann::json;

enum class Outcome { pass, fail, indeterminate };

constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::indeterminate: return "indeterminate";
  }
  return "unknown";
}

inline json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }
inline json to_json(const Dist16& d) { return d.is_infinite() ? json(nullptr) : to_json(d.to_rational()); }
inline json to_json(const std::optional<Rational>& r) { return r ? to_json(*r) : json(nullptr); }

/// One checked instance: an exact expected value and/or an interval, and the computed value.
struct Instance {
  json params = json::object();
  std::optional<Rational> expected;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::optional<Rational> computed;
  Outcome outcome = Outcome::indeterminate;
  std::string note;

  /// Sets the outcome from the expectations; `settled` is false for budget-limited values.
  void judge(bool settled = true) {
    if (!computed || !settled) {
      outcome = Outcome::indeterminate;
      return;
    }
    bool ok = true;
    if (expected) ok = ok && *computed == *expected;
    if (lower) ok = ok && *lower <= *computed;
    if (upper) ok = ok && *computed <= *upper;
    outcome = ok ? Outcome::pass : Outcome::fail;
  }
  void require(bool ok, std::string why = {}) {
    outcome = ok ? Outcome::pass : Outcome::fail;
    if (!ok && note.empty()) note = std::move(why);
  }

  json to_json() const {
    json j;
    j["params"] = params;
    j["expected"] = dirprod::to_json(expected);
    j["lower"] = dirprod::to_json(lower);
    j["upper"] = dirprod::to_json(upper);
    j["computed"] = dirprod::to_json(computed);
    j["outcome"] = std::string(to_string(outcome));
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

struct CheckReport {
  std::string id;
  std::string title;
  std::vector<Instance> instances;

  int count(Outcome o) const {
    return static_cast<int>(std::count_if(instances.begin(), instances.end(),
                                          [o](const Instance& i) { return i.outcome == o; }));
  }
  Outcome outcome() const {
    if (count(Outcome::fail) > 0) return Outcome::fail;
    if (count(Outcome::indeterminate) > 0) return Outcome::indeterminate;
    return Outcome::pass;
  }

  json to_json() const {
    json j;
    j["id"] = id;
    j["title"] = title;
    json list = json::array();
    for (const auto& i : instances) list.push_back(i.to_json());
    j["instances"] = std::move(list);
    j["totals"] = {{"pass", count(Outcome::pass)},
                   {"fail", count(Outcome::fail)},
                   {"indeterminate", count(Outcome::indeterminate)}};
    j["outcome"] = std::string(to_string(outcome()));
    return j;
  }

  std::string to_tsv() const {
    std::ostringstream os;
    for (const auto& i : instances) {
      auto r = [](const std::optional<Rational>& x) { return x ? x->str() : std::string("-"); };
      os << id << '\t' << i.params.dump() << '\t' << r(i.expected) << '\t' << r(i.lower) << '\t' << r(i.upper)
         << '\t' << r(i.computed) << '\t' << to_string(i.outcome) << '\n';
    }
    return os.str();
  }
};

struct ReportOptions {
  std::uint64_t budget = kDefaultTriangleBudget;
  int jobs = 1;
  std::uint64_t seed = 1;
};

namespace detail {

/// Runs `count` independent instances in parallel; results keep grid order.
inline std::vector<Instance> run_instances(std::size_t count, int jobs, const std::function<Instance(std::size_t)>& body) {
  std::vector<Instance> out(count);
  parallel_for(count, jobs, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

inline DeltaOptions delta_options(const ReportOptions& o) {
  DeltaOptions d;
  d.triangle_budget = o.budget;
  d.jobs = 1;
  return d;
}

inline Rational half(std::int64_t num) { return Rational(num, 2); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Hyperbolicity of product families

/// Closed form for delta(C_m x P_n), m odd.
inline Rational cmxpn_formula(int m, int n) {
  if (n - 1 <= m) return Rational(m, 2);
  if (n - 1 < 2 * m) return Rational(n - 1, 2);
  return Rational(2 * m - 1, 2);
}

inline CheckReport report_cmxpn(const std::vector<int>& ms, const std::vector<int>& ns, const ReportOptions& opt = {}) {
  std::vector<std::pair<int, int>> grid;
  for (int m : ms) {
    if (m < 3 || m % 2 == 0) throw Error(ErrorCode::BadParameter, "m must be odd and at least 3");
    for (int n : ns) grid.emplace_back(m, n);
  }
  CheckReport r{"cycle-path-product", "hyperbolicity constant of odd cycle times path", {}};
  r.instances = detail::run_instances(grid.size(), opt.jobs, [&](std::size_t k) {
    const auto [m, n] = grid[k];
    Instance in;
    in.params = {{"m", m}, {"n", n}};
    in.expected = cmxpn_formula(m, n);
    const auto res = delta_exact(direct_product(cycle_graph(m), path_graph(n)).graph, detail::delta_options(opt));
    in.computed = res.delta.to_rational();
    in.judge(res.mode == DeltaMode::exact);
    return in;
  });
  return r;
}

inline CheckReport report_pmxpn(const std::vector<int>& ms, const std::vector<int>& ns, const ReportOptions& opt = {}) {
  std::vector<std::pair<int, int>> grid;
  for (int m : ms)
    for (int n : ns)
      if (m >= n && n >= 2) grid.emplace_back(m, n);
  CheckReport r{"path-path-product", "hyperbolicity constant of path times path", {}};
  r.instances = detail::run_instances(grid.size(), opt.jobs, [&](std::size_t k) {
    const auto [m, n] = grid[k];
    Instance in;
    in.params = {{"m", m}, {"n", n}};
    if (n == 2) {
      in.expected = Rational(0);
    } else if (m % 2 == 1 && m <= 2 * n - 3) {
      in.expected = Rational(m - 1, 2);
    }
    if (n >= 3) {
      const Rational half_m(m, 2);
      in.lower = std::min(half_m, Rational(n - 1)) - Rational(1);
      in.upper = std::min(half_m, Rational(n)) - Rational(1, 2);
    }
    const auto res = delta_exact(direct_product(path_graph(m), path_graph(n)).graph, detail::delta_options(opt));
    in.computed = res.delta.to_rational();
    in.judge(res.mode == DeltaMode::exact);
    return in;
  });
  return r;
}

struct BipartiteCase {
  std::string name;
  Graph first;
  Graph second;
};

namespace detail {

inline Instance bipartite_instance(const BipartiteCase& c, const ReportOptions& opt) {
  if (!is_bipartite(c.first) || !is_bipartite(c.second))
    throw Error(ErrorCode::NotBipartite, c.name + ": factors must be bipartite");
  if (!is_connected(c.first) || !is_connected(c.second))
    throw Error(ErrorCode::Disconnected, c.name + ": factors must be connected");
  const Graph* g1 = &c.first;
  const Graph* g2 = &c.second;
  std::int64_t k1 = diam_vertices(*g1).value() / 16;
  std::int64_t k2 = diam_vertices(*g2).value() / 16;
  if (k1 < k2) {
    std::swap(g1, g2);
    std::swap(k1, k2);
  }
  if (k2 < 1) throw Error(ErrorCode::BadParameter, c.name + ": factors need an edge");
  Instance in;
  in.params = {{"case", c.name}, {"k1", k1}, {"k2", k2}};
  const auto d1 = delta_exact(*g1, delta_options(opt));
  const auto d2 = delta_exact(*g2, delta_options(opt));
  const auto dp = delta_exact(direct_product(*g1, *g2).graph, delta_options(opt));
  Rational lower = std::min(Rational(k1 - 1, 2), Rational(k2 - 1));
  lower = std::max({lower, d1.delta.to_rational(), d2.delta.to_rational()});
  in.lower = lower;
  in.upper = Rational(k1, 2);
  if (k1 % 2 == 0 && k1 <= 2 * k2 - 2) in.expected = Rational(k1, 2);
  in.computed = dp.delta.to_rational();
  in.judge(d1.mode == DeltaMode::exact && d2.mode == DeltaMode::exact && dp.mode == DeltaMode::exact);
  return in;
}

}  // namespace detail

inline CheckReport report_bipartite(const std::vector<BipartiteCase>& cases, const ReportOptions& opt = {}) {
  CheckReport r{"bipartite-product", "bounds for products of bipartite graphs", {}};
  r.instances = detail::run_instances(cases.size(), opt.jobs,
                                      [&](std::size_t k) { return detail::bipartite_instance(cases[k], opt); });
  return r;
}

inline CheckReport report_bipartite(const Graph& g1, const Graph& g2, const ReportOptions& opt = {}) {
  return report_bipartite(std::vector<BipartiteCase>{{"given", g1, g2}}, opt);
}

/// Explicit three-geodesic triangle in P_n x P_n; returns the triangle in product ids.
inline Triangle unbounded_growth_triangle(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::BadParameter, "n must be odd and at least 3");
  const ProductIndex idx{n, n};
  // Factor vertex k (1-based in the construction) is id k - 1.
  auto at = [&](int i, int j) { return Point::vertex(idx.id(i - 1, j - 1)); };
  Triangle t;
  PointPath g1, g2, g3;
  for (int i = 1; i <= n; ++i) g1.push_back(at(i, i % 2 == 1 ? 2 : 1));
  for (int j = 2; j <= n; ++j) g2.push_back(at(j % 2 == 0 ? 1 : 2, j));
  for (int i = 2; i <= n; ++i) g3.push_back(at(i, n + 2 - i));
  // Orient as [xy], [yz], [zx] with x = (w1, v2), y = (wn, v2), z = (w2, vn).
  std::reverse(g3.begin(), g3.end());
  std::reverse(g2.begin(), g2.end());
  t.corners = {g1.front(), g1.back(), g3.back()};
  t.sides = {g1, g3, g2};
  return t;
}

inline CheckReport report_unbounded_growth(const std::vector<int>& ns, const ReportOptions& opt = {}) {
  CheckReport r{"unbounded-growth", "explicit fat triangle in path times path", {}};
  r.instances = detail::run_instances(ns.size(), opt.jobs, [&](std::size_t k) {
    const int n = ns[k];
    Instance in;
    in.params = {{"n", n}};
    in.lower = Rational(n - 3, 2);
    const Product p = direct_product(path_graph(n), path_graph(n));
    const Triangle t = unbounded_growth_triangle(n);
    // Each side must have the length of the product distance between its ends.
    const ParityTable table(path_graph(n));
    bool geodesic = true;
    for (const auto& side : t.sides) {
      const auto [a1, a2] = p.index.coords(side.front().vertex_id());
      const auto [b1, b2] = p.index.coords(side.back().vertex_id());
      const Dist16 d = product_distance(table(a1, b1), table(a2, b2));
      geodesic = geodesic && d == Dist16::edges(static_cast<std::int64_t>(side.size()) - 1);
    }
    if (!geodesic) {
      in.require(false, "side is not a geodesic");
      return in;
    }
    in.computed = thin_constant(p.graph, t).value.to_rational();
    in.judge();
    return in;
  });
  return r;
}

inline CheckReport report_p2_growth(const std::vector<int>& ls, const ReportOptions& opt = {}) {
  CheckReport r{"p2-growth", "growth of dumbbell times P2", {}};
  const Graph p2 = path_graph(2);
  std::vector<DeltaResult> prod(ls.size());
  std::vector<DeltaResult> base(ls.size());
  parallel_for(ls.size(), opt.jobs, [&](std::size_t k) {
    const Graph d = dumbbell_graph(ls[k]);
    base[k] = delta_exact(d, detail::delta_options(opt));
    prod[k] = delta_exact(direct_product(d, p2).graph, detail::delta_options(opt));
  });
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const std::int64_t L = ls[k];
    Instance in;
    in.params = {{"L", L}, {"delta_base", to_json(base[k].delta)}};
    in.computed = prod[k].delta.to_rational();
    const bool settled = base[k].mode == DeltaMode::exact && prod[k].mode == DeltaMode::exact;
    if (!settled) {
      in.judge(false);
    } else {
      // sqrt(L/2) <= 2 delta(D x P2) + 4 delta(D), squared and scaled to sixteenths.
      const std::int64_t rhs = 2 * prod[k].delta.value() + 4 * base[k].delta.value();
      bool ok = 128 * L <= rhs * rhs;
      std::string why = ok ? "" : "lower bound violated";
      if (k > 0) {
        const bool prev_settled = base[k - 1].mode == DeltaMode::exact && prod[k - 1].mode == DeltaMode::exact;
        if (prev_settled && !(prod[k - 1].delta < prod[k].delta)) {
          ok = false;
          why = "not strictly larger than the previous bridge length";
        }
        in.lower = prod[k - 1].delta.to_rational();
      }
      in.require(ok, why);
    }
    r.instances.push_back(std::move(in));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Distances and components

namespace detail {

inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  for (std::uint64_t s = seed;; s += 0x9e3779b97f4a7c15ULL) {
    Graph g = random_graph(n, p, s);
    if (is_connected(g)) return g;
  }
}

/// Deterministic factor pairs: sizes 2..12, densities alternating sparse and dense so both
/// bipartite and non-bipartite factors occur.
inline std::vector<std::pair<Graph, Graph>> random_factor_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Graph, Graph>> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto make = [&](std::size_t salt) {
      const int n = 2 + static_cast<int>(uniform_below(rng, 11));
      if ((k + salt) % 3 == 0) return random_tree(n, rng());
      const double p = (k + salt) % 3 == 1 ? 0.3 : 0.6;
      return random_connected_graph(n, p, rng());
    };
    Graph a = make(0);
    Graph b = make(1);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace detail

/// Walk-parity distance formula against BFS on the built product, the factor-distance lower
/// bound, and the closed form for C_m x P_n.
inline CheckReport report_product_distance(const ReportOptions& opt = {}, std::size_t factor_pairs = 20,
                                             std::size_t samples = 10) {
  CheckReport r{"product-distance", "product distances from factor parity distances", {}};
  const auto pairs = detail::random_factor_pairs(factor_pairs, opt.seed);
  r.instances = detail::run_instances(pairs.size(), opt.jobs, [&](std::size_t k) {
    const auto& [g1, g2] = pairs[k];
    const Product p = direct_product(g1, g2);
    const ParityTable t1(g1);
    const ParityTable t2(g2);
    std::mt19937_64 rng(opt.seed * 7919 + k);
    Instance in;
    in.params = {{"pair", k}, {"n1", g1.order()}, {"n2", g2.order()},
                 {"bipartite1", is_bipartite(g1).has_value()}, {"bipartite2", is_bipartite(g2).has_value()}};
    int mismatches = 0;
    const DistanceMatrix d1 = apsp(g1);
    const DistanceMatrix d2 = apsp(g2);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto a = static_cast<VertexId>(detail::uniform_below(rng, static_cast<std::uint64_t>(p.graph.order())));
      const auto b = static_cast<VertexId>(detail::uniform_below(rng, static_cast<std::uint64_t>(p.graph.order())));
      const int bfs = bfs_hops(p.graph, a)[static_cast<std::size_t>(b)];
      const auto [a1, a2] = p.index.coords(a);
      const auto [b1, b2] = p.index.coords(b);
      const Dist16 formula = product_distance(t1(a1, b1), t2(a2, b2));
      const Dist16 oracle = bfs == kUnreached ? Dist16::infinity() : Dist16::edges(bfs);
      if (formula != oracle) ++mismatches;
      if (oracle.is_finite() && oracle.value() < 16 * std::max(d1.hops(a1, b1), d2.hops(a2, b2))) ++mismatches;
    }
    in.expected = Rational(0);
    in.computed = Rational(mismatches);
    in.judge();
    return in;
  });
  // Closed form on cycle times path.
  for (int m : {3, 5, 7}) {
    for (int n : {2, 5, 9, 16}) {
      const Product p = direct_product(cycle_graph(m), path_graph(n));
      int mismatches = 0;
      for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= n; ++i) {
          const auto d = bfs_hops(p.graph, p.index.id(j - 1, i - 1));
          for (int rr = 1; rr <= m; ++rr)
            for (int s = 1; s <= n; ++s)
              if (d[static_cast<std::size_t>(p.index.id(rr - 1, s - 1))] != cmxpn_distance(m, n, j, i, rr, s)) ++mismatches;
        }
      }
      Instance in;
      in.params = {{"closed_form_m", m}, {"closed_form_n", n}};
      in.expected = Rational(0);
      in.computed = Rational(mismatches);
      in.judge();
      r.instances.push_back(std::move(in));
    }
  }
  return r;
}

inline CheckReport report_component_count(const ReportOptions& opt = {}, std::size_t factor_pairs = 30) {
  CheckReport r{"component-count", "number of components of a product", {}};
  const auto pairs = detail::random_factor_pairs(factor_pairs, opt.seed + 1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [g1, g2] = pairs[k];
    Instance in;
    const bool b1 = is_bipartite(g1).has_value();
    const bool b2 = is_bipartite(g2).has_value();
    in.params = {{"pair", k}, {"bipartite1", b1}, {"bipartite2", b2}};
    in.expected = Rational(predict_component_count({b1, b2}));
    in.computed = Rational(static_cast<std::int64_t>(components(direct_product(g1, g2).graph).size()));
    in.judge();
    r.instances.push_back(std::move(in));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Structural invariants

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Desk-scale corpus: paths, cycles, complete and complete bipartite graphs, dumbbells, cycles with
/// tails, trees and random graphs, all with at most 12 vertices.
inline std::vector<NamedGraph> default_corpus(std::uint64_t seed = 1) {
  std::vector<NamedGraph> c;
  for (int m = 1; m <= 9; ++m) c.push_back({"path-" + std::to_string(m), path_graph(m)});
  for (int m = 3; m <= 10; ++m) c.push_back({"cycle-" + std::to_string(m), cycle_graph(m)});
  for (int n = 3; n <= 6; ++n) c.push_back({"complete-" + std::to_string(n), complete_graph(n)});
  c.push_back({"complete-bipartite-2-3", complete_bipartite_graph(2, 3)});
  c.push_back({"complete-bipartite-3-3", complete_bipartite_graph(3, 3)});
  for (int l = 1; l <= 7; ++l) c.push_back({"dumbbell-" + std::to_string(l), dumbbell_graph(l)});
  c.push_back({"cycle-with-pendant-3-4", cycle_with_pendant_graph(3, 4)});
  c.push_back({"cycle-with-pendant-5-2", cycle_with_pendant_graph(5, 2)});
  c.push_back({"cycle-with-pendant-7-3", cycle_with_pendant_graph(7, 3)});
  for (int k = 0; k < 4; ++k) {
    const int n = 5 + 2 * k;
    c.push_back({"tree-" + std::to_string(n), random_tree(n, seed + static_cast<std::uint64_t>(k))});
  }
  std::mt19937_64 rng(seed + 99);
  for (int k = 0; k < 12; ++k) {
    const int n = 4 + static_cast<int>(detail::uniform_below(rng, 9));
    const double p = k % 2 == 0 ? 0.3 : 0.5;
    c.push_back({"random-" + std::to_string(k), random_graph(n, p, rng())});
  }
  return c;
}

/// Grid and sandwich properties of delta, the diameter bound, and the witness re-check.
inline CheckReport report_thin_invariants(const std::vector<NamedGraph>& corpus, const ReportOptions& opt = {}) {
  CheckReport r{"thin-invariants", "grid, sandwich and diameter properties of the thin constant", {}};
  r.instances = detail::run_instances(corpus.size(), opt.jobs, [&](std::size_t k) {
    const Graph& g = corpus[k].graph;
    Instance in;
    in.params = {{"graph", corpus[k].name}};
    const auto full = delta_exact(g, detail::delta_options(opt));
    const auto vert = delta_vertex(g, detail::delta_options(opt));
    in.computed = full.delta.to_rational();
    if (full.mode != DeltaMode::exact || vert.mode != DeltaMode::exact) {
      in.judge(false);
      return in;
    }
    const Dist16 bound = delta_upper_diam(g);
    in.lower = vert.delta.to_rational();
    in.upper = std::min(bound.to_rational(), Rational(4) * vert.delta.to_rational() + Rational(1, 2));
    in.judge();
    if (in.outcome != Outcome::pass) return in;
    const bool grid = full.delta.is_multiple_of(4) && vert.delta.is_multiple_of(8);
    const bool witness = thin_constant(g, full.witness).value == full.delta &&
                         distance_to_other_sides(g, full.witness, 0, full.witness_point) == full.delta;
    in.require(grid && witness, grid ? "witness triangle does not realize the constant" : "off the expected grid");
    return in;
  });
  return r;
}

/// Minimal cycles are isometric and irreducible, and no longer than four times delta.
inline CheckReport report_odd_cycle_bound(const std::vector<NamedGraph>& corpus, const ReportOptions& opt = {}) {
  CheckReport r{"odd-cycle-bound", "minimal odd cycles against the thin constant", {}};
  std::vector<std::size_t> odd;
  for (std::size_t k = 0; k < corpus.size(); ++k)
    if (!is_bipartite(corpus[k].graph)) odd.push_back(k);
  r.instances = detail::run_instances(odd.size(), opt.jobs, [&](std::size_t i) {
    const auto& [name, g] = corpus[odd[i]];
    Instance in;
    in.params = {{"graph", name}};
    const auto cycles = minimal_cycles(g);
    const auto full = delta_exact(g, detail::delta_options(opt));
    int longest = 0;
    bool consistent = !cycles.empty();
    for (const auto& c : cycles) {
      longest = std::max(longest, c.length);
      consistent = consistent && is_isometric_cycle(g, c.vertices) && !reduce_cycle(g, c.vertices);
    }
    in.computed = Rational(longest);
    in.upper = Rational(4) * full.delta.to_rational();
    in.judge(full.mode == DeltaMode::exact);
    if (in.outcome == Outcome::pass && !consistent) in.require(false, "minimal cycle failed the isometry cross-check");
    return in;
  });
  return r;
}

/// delta(C_m x P_n') <= delta(C_m x P_n) for the isometric strip C_m x P_n' inside C_m x P_n.
inline CheckReport report_isometric_subgraph(const ReportOptions& opt = {}) {
  CheckReport r{"isometric-subgraph", "thin constant of isometric subgraphs", {}};
  std::vector<std::tuple<int, int, int>> grid;
  for (int m : {3, 5})
    for (int n = 3; n <= 8; ++n)
      for (int sub = 2; sub < n; ++sub) grid.emplace_back(m, sub, n);
  r.instances = detail::run_instances(grid.size(), opt.jobs, [&](std::size_t k) {
    const auto [m, sub, n] = grid[k];
    Instance in;
    in.params = {{"m", m}, {"n_sub", sub}, {"n", n}};
    const Product big = direct_product(cycle_graph(m), path_graph(n));
    std::vector<VertexId> keep;
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < sub; ++i) keep.push_back(big.index.id(j, i));
    std::sort(keep.begin(), keep.end());
    const auto [small, map] = induced_subgraph(big.graph, keep);
    const DistanceMatrix ds = apsp(small);
    const DistanceMatrix db = apsp(big.graph);
    bool isometric = true;
    for (VertexId a = 0; a < small.order(); ++a)
      for (VertexId b = 0; b < small.order(); ++b)
        isometric = isometric && ds.raw(a, b) == db.raw(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    const auto dsmall = delta_exact(small, detail::delta_options(opt));
    const auto dbig = delta_exact(big.graph, detail::delta_options(opt));
    in.computed = dsmall.delta.to_rational();
    in.upper = dbig.delta.to_rational();
    in.judge(dsmall.mode == DeltaMode::exact && dbig.mode == DeltaMode::exact);
    if (in.outcome == Outcome::pass && !isometric) in.require(false, "strip is not isometric");
    return in;
  });
  return r;
}

// ---------------------------------------------------------------------------
// Quasi-isometry constructions

namespace detail {

inline Instance qi_instance(std::string name, const Construction& c, Rational alpha, Rational beta, Rational eps) {
  Instance in;
  const QiReport q = qi_constants(c.domain, c.codomain, c.map, c.target);
  in.params = {{"case", std::move(name)}, {"alpha", to_json(alpha)}, {"epsilon_bound", to_json(eps)}};
  in.computed = q.beta_at(alpha);
  in.upper = beta;
  in.judge();
  if (in.outcome == Outcome::pass && !q.full_within(eps)) in.require(false, "fullness bound exceeded");
  if (in.outcome == Outcome::pass && !q.embedding_ok) in.require(false, "finite/infinite distance mismatch");
  return in;
}

}  // namespace detail

inline CheckReport report_odd_factor_embedding(const ReportOptions& opt = {}) {
  CheckReport r{"odd-factor-embedding", "slice embedding into a product with an odd-cycle factor", {}};
  const std::vector<std::tuple<std::string, Graph, Graph>> cases{
      {"path-4 x cycle-3", path_graph(4), cycle_graph(3)},
      {"cycle-4 x cycle-5", cycle_graph(4), cycle_graph(5)},
      {"path-3 x complete-4", path_graph(3), complete_graph(4)},
      {"dumbbell-2 x cycle-with-pendant-5-2", dumbbell_graph(2), cycle_with_pendant_graph(5, 2)},
      {"tree-7 x cycle-7", random_tree(7, 3), cycle_graph(7)}};
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const auto& [name, g1, g2] = cases[k];
    const Rational girth(*odd_girth(g2));
    const Rational diam(diam_vertices(g2).value() / 16);
    return detail::qi_instance(name, odd_factor_embedding(g1, g2), Rational(1), girth, diam + girth);
  });
  return r;
}

inline CheckReport report_bipartite_embedding(const ReportOptions& opt = {}) {
  CheckReport r{"bipartite-embedding", "parity embedding into one component of a bipartite product", {}};
  const std::vector<std::tuple<std::string, Graph, Graph>> cases{
      {"path-5 x path-2", path_graph(5), path_graph(2)},
      {"path-4 x cycle-4", path_graph(4), cycle_graph(4)},
      {"tree-8 x path-3", random_tree(8, 5), path_graph(3)},
      {"cycle-6 x complete-bipartite-2-3", cycle_graph(6), complete_bipartite_graph(2, 3)}};
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const auto& [name, g1, g2] = cases[k];
    const Rational diam(diam_vertices(g2).value() / 16);
    auto in = detail::qi_instance(name, bipartite_embedding(g1, g2), Rational(1), Rational(0), diam);
    return in;
  });
  return r;
}

inline CheckReport report_edge_inclusion(const ReportOptions& opt = {}) {
  CheckReport r{"edge-inclusion", "inclusion of G1 x [w1,w2] into G1 x G2", {}};
  const std::vector<std::tuple<std::string, Graph, Graph>> cases{
      {"cycle-3 x path-3", cycle_graph(3), path_graph(3)},
      {"cycle-5 x cycle-4", cycle_graph(5), cycle_graph(4)},
      {"complete-4 x path-4", complete_graph(4), path_graph(4)},
      {"dumbbell-2 x tree-5", dumbbell_graph(2), random_tree(5, 2)}};
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const auto& [name, g1, g2] = cases[k];
    const Rational diam(diam_vertices(g2).value() / 16);
    const Construction c = edge_inclusion(g1, g2);
    Instance in = detail::qi_instance(name, c, Rational(1), Rational(0), diam);
    if (in.outcome != Outcome::pass) return in;
    // The strip is no fatter than the whole product.
    const auto strip = delta_exact(c.domain, detail::delta_options(opt));
    const auto whole = delta_exact(c.codomain, detail::delta_options(opt));
    if (strip.mode != DeltaMode::exact || whole.mode != DeltaMode::exact) {
      in.outcome = Outcome::indeterminate;
    } else if (whole.delta < strip.delta) {
      in.require(false, "strip has a larger thin constant");
    }
    return in;
  });
  return r;
}

inline CheckReport report_vertex_extension(const ReportOptions& opt = {}) {
  CheckReport r{"vertex-extension", "extension of vertex maps to the metric graph", {}};
  struct Case {
    std::string name;
    Construction c;
    Rational alpha, beta, eps;
  };
  std::vector<Case> cases;
  {
    const Graph c5 = cycle_graph(5);
    Construction id{c5, c5, {0, 1, 2, 3, 4}, {}};
    cases.push_back({"identity cycle-5", id, Rational(1), Rational(0), Rational(0)});
  }
  cases.push_back({"path-4 x cycle-3 slice", odd_factor_embedding(path_graph(4), cycle_graph(3)), Rational(1),
                   Rational(3), Rational(4)});
  cases.push_back({"path-5 x path-2 parity", bipartite_embedding(path_graph(5), path_graph(2)), Rational(1),
                   Rational(0), Rational(1)});
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const Case& c = cases[k];
    Instance in;
    in.params = {{"case", c.name}};
    const QiReport f = qi_constants(c.c.domain, c.c.codomain, c.c.map, c.c.target);
    const ExtensionReport g = extend_vertex_map(c.c.domain, c.c.codomain, c.c.map, c.c.target);
    // The extension is an (alpha, alpha + beta) embedding and (epsilon + 1/2)-full.
    in.computed = g.qi.beta_at(c.alpha);
    in.upper = c.alpha + f.beta_at(c.alpha);
    in.judge();
    const bool base_ok = f.within(c.alpha, c.beta) && f.full_within(c.eps);
    const bool full_ok = g.fullness && *g.fullness <= *f.epsilon + Rational(1, 2);
    if (in.outcome == Outcome::pass && !(base_ok && full_ok)) in.require(false, "fullness or base constants out of bounds");
    return in;
  });
  return r;
}

inline CheckReport report_ball_collapse(const ReportOptions& opt = {}) {
  CheckReport r{"ball-collapse", "collapsing disjoint balls to star vertices", {}};
  const std::vector<std::tuple<std::string, Graph, std::vector<BallSpec>>> cases{
      {"cycle-5 ball(0,1)", cycle_graph(5), {{0, 1}}},
      {"dumbbell-4 balls(2,1),(6,1)", dumbbell_graph(4), {{2, 1}, {6, 1}}},
      {"cycle-7 ball(0,2)", cycle_graph(7), {{0, 2}}},
      {"cycle-with-pendant-3-4 ball(0,2)", cycle_with_pendant_graph(3, 4), {{0, 2}}},
      {"dumbbell-8 balls(1,2),(11,2)", dumbbell_graph(8), {{1, 2}, {11, 2}}}};
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const auto& [name, g, balls] = cases[k];
    const CollapseResult cr = collapse_balls(g, balls);
    const Rational kk(cr.max_radius);
    return detail::qi_instance(name, Construction{g, cr.graph, cr.map, {}}, kk, Rational(2) * kk, Rational(0));
  });
  return r;
}

inline CheckReport report_product_star(const ReportOptions& opt = {}) {
  CheckReport r{"product-star", "collapsing ball slabs of G1 x P2 to star vertices", {}};
  const std::vector<std::tuple<std::string, Graph, std::vector<BallSpec>, std::optional<int>>> cases{
      {"dumbbell-4 balls(2,1),(6,1)", dumbbell_graph(4), {{2, 1}, {6, 1}}, 4},
      {"cycle-3 ball(0,2)", cycle_graph(3), {{0, 2}}, 4},
      {"cycle-5 ball(0,1)", cycle_graph(5), {{0, 1}}, std::nullopt},
      {"dumbbell-6 balls(2,1),(8,1)", dumbbell_graph(6), {{2, 1}, {8, 1}}, 4}};
  const Graph p2 = path_graph(2);
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const auto& [name, g, balls, m] = cases[k];
    const ProductStarResult ps = product_star(g, balls, m);
    const int bound = 4 * ps.max_radius + ps.m;
    Instance in = detail::qi_instance(name, Construction{direct_product(g, p2).graph, ps.graph, ps.map, {}},
                                      Rational(bound + 1), Rational(bound), Rational(0));
    in.params["M"] = ps.m;
    return in;
  });
  return r;
}

/// w -> (w, v1) into G1 x P2 is a (1, 2K + 4 delta)-embedding and 1-full, K the largest distance
/// to a minimal cycle.
inline CheckReport report_cycle_density(const ReportOptions& opt = {}) {
  CheckReport r{"cycle-density", "slice embedding when minimal cycles are dense", {}};
  const std::vector<NamedGraph> cases{{"cycle-5", cycle_graph(5)},
                                      {"dumbbell-6", dumbbell_graph(6)},
                                      {"cycle-with-pendant-3-4", cycle_with_pendant_graph(3, 4)},
                                      {"complete-4", complete_graph(4)}};
  const Graph p2 = path_graph(2);
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const auto& [name, g] = cases[k];
    const auto field = dist_to_minimal_cycles(g);
    std::int64_t kk = 0;
    for (const Dist16& d : field) kk = std::max(kk, d.value() / 16);
    const auto del = delta_exact(g, detail::delta_options(opt));
    Construction c{g, direct_product(g, p2).graph, {}, {}};
    for (VertexId w = 0; w < g.order(); ++w) c.map.push_back(2 * w);
    Instance in = detail::qi_instance(name, c, Rational(1), Rational(2 * kk) + Rational(4) * del.delta.to_rational(),
                                      Rational(1));
    if (del.mode != DeltaMode::exact) in.outcome = Outcome::indeterminate;
    return in;
  });
  return r;
}

// ---------------------------------------------------------------------------
// Lifts into G1 x P2

/// All geodesics of length at most `max_len`, including single vertices.
inline std::vector<VertexPath> short_geodesics(const Graph& g, int max_len) {
  std::vector<VertexPath> out;
  const DistanceMatrix d = apsp(g);
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = 0; v < g.order(); ++v)
      if (d.connected(u, v) && d.hops(u, v) <= max_len)
        for (auto& p : enumerate_geodesics(g, u, v)) out.push_back(std::move(p));
  return out;
}

inline CheckReport report_lift_geodesic(const ReportOptions& opt = {}) {
  CheckReport r{"lift-geodesic", "alternating lifts of geodesics into G1 x P2", {}};
  const std::vector<NamedGraph> cases{{"cycle-5", cycle_graph(5)},
                                      {"dumbbell-4", dumbbell_graph(4)},
                                      {"complete-bipartite-3-3", complete_bipartite_graph(3, 3)},
                                      {"cycle-with-pendant-5-2", cycle_with_pendant_graph(5, 2)}};
  const Graph p2 = path_graph(2);
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const auto& [name, g] = cases[k];
    const Product p = direct_product(g, p2);
    int bad = 0;
    for (const auto& geo : short_geodesics(g, 10)) {
      const auto l1 = lift_gamma(g, geo, 1);
      const auto l2 = lift_gamma(g, geo, 2);
      if (!is_geodesic(p.graph, l1) || !is_geodesic(p.graph, l2)) ++bad;
      for (std::size_t i = 0; i < l1.size(); ++i)
        if (l2[i] != swap_p2(l1[i])) ++bad;
    }
    Instance in;
    in.params = {{"graph", name}};
    in.expected = Rational(0);
    in.computed = Rational(bad);
    in.judge();
    return in;
  });
  return r;
}

/// Lower and upper estimates for the distance between opposite-parity lifts of geodesic ends.
inline CheckReport report_lift_distance(const ReportOptions& opt = {}, int max_len = 8) {
  CheckReport r{"lift-distance", "distance between opposite lifts of geodesic endpoints", {}};
  const std::vector<NamedGraph> cases{{"cycle-5", cycle_graph(5)},
                                      {"dumbbell-6", dumbbell_graph(6)},
                                      {"cycle-with-pendant-3-4", cycle_with_pendant_graph(3, 4)}};
  r.instances = detail::run_instances(cases.size(), opt.jobs, [&](std::size_t k) {
    const auto& [name, g] = cases[k];
    const auto field = dist_to_minimal_cycles(g);
    const auto del = delta_exact(g, detail::delta_options(opt));
    Instance in;
    in.params = {{"graph", name}, {"max_length", max_len}};
    if (del.mode != DeltaMode::exact) {
      in.judge(false);
      return in;
    }
    int checked = 0;
    int bad = 0;
    for (const auto& geo : short_geodesics(g, max_len)) {
      const Dist16 oracle = lifted_endpoint_distance(g, geo);
      for (int j = 0; j < static_cast<int>(geo.size()); ++j) {
        const LiftDistanceCheck c = check_lift_distance(g, geo, j, field, del.delta);
        ++checked;
        if (!c.holds() || oracle != Dist16::edges(c.lhs)) ++bad;
      }
    }
    in.params["checked"] = checked;
    in.expected = Rational(0);
    in.computed = Rational(bad);
    in.judge();
    return in;
  });
  return r;
}

// ---------------------------------------------------------------------------
// Registry and verification

struct CheckEntry {
  std::string id;
  std::function<CheckReport(const ReportOptions&)> run;
};

inline std::vector<int> range_inclusive(int a, int b) {
  std::vector<int> v;
  for (int i = a; i <= b; ++i) v.push_back(i);
  return v;
}

/// Explicit trees used for the equality case of the bipartite bounds.
inline std::vector<BipartiteCase> default_bipartite_cases() {
  // Spiders: a path with one extra leaf.
  auto spider = [](int len, int at) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < len; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(at, len + 1);
    return build_graph(e, len + 2);
  };
  return {{"path-5 x path-4", path_graph(5), path_graph(4)},
          {"cycle-6 x cycle-6", cycle_graph(6), cycle_graph(6)},
          {"path-9 x path-2", path_graph(9), path_graph(2)},
          {"spider-4 x spider-3", spider(4, 2), spider(3, 1)},
          {"spider-6 x spider-4", spider(6, 3), spider(4, 2)},
          {"path-6 x cycle-4", path_graph(6), cycle_graph(4)}};
}

/// Every check reachable from `verify`, in fixed order, with desk-scale default grids.
inline std::vector<CheckEntry> check_registry() {
  std::vector<CheckEntry> r;
  r.push_back({"product-distance", [](const ReportOptions& o) { return report_product_distance(o); }});
  r.push_back({"component-count", [](const ReportOptions& o) { return report_component_count(o); }});
  r.push_back({"thin-invariants", [](const ReportOptions& o) { return report_thin_invariants(default_corpus(o.seed), o); }});
  r.push_back({"odd-cycle-bound", [](const ReportOptions& o) { return report_odd_cycle_bound(default_corpus(o.seed), o); }});
  r.push_back({"isometric-subgraph", [](const ReportOptions& o) { return report_isometric_subgraph(o); }});
  r.push_back({"cycle-path-product", [](const ReportOptions& o) {
                 auto rep = report_cmxpn({3, 5}, range_inclusive(2, 12), o);
                 auto extra = report_cmxpn({7}, {2, 8}, o);
                 rep.instances.insert(rep.instances.end(), extra.instances.begin(), extra.instances.end());
                 return rep;
               }});
  r.push_back({"path-path-product", [](const ReportOptions& o) {
                 return report_pmxpn(range_inclusive(2, 9), range_inclusive(2, 7), o);
               }});
  r.push_back({"bipartite-product", [](const ReportOptions& o) { return report_bipartite(default_bipartite_cases(), o); }});
  r.push_back({"unbounded-growth", [](const ReportOptions& o) { return report_unbounded_growth({5, 7, 9, 11}, o); }});
  r.push_back({"p2-growth", [](const ReportOptions& o) { return report_p2_growth({4, 8, 16}, o); }});
  r.push_back({"vertex-extension", [](const ReportOptions& o) { return report_vertex_extension(o); }});
  r.push_back({"odd-factor-embedding", [](const ReportOptions& o) { return report_odd_factor_embedding(o); }});
  r.push_back({"bipartite-embedding", [](const ReportOptions& o) { return report_bipartite_embedding(o); }});
  r.push_back({"edge-inclusion", [](const ReportOptions& o) { return report_edge_inclusion(o); }});
  r.push_back({"cycle-density", [](const ReportOptions& o) { return report_cycle_density(o); }});
  r.push_back({"ball-collapse", [](const ReportOptions& o) { return report_ball_collapse(o); }});
  r.push_back({"product-star", [](const ReportOptions& o) { return report_product_star(o); }});
  r.push_back({"lift-geodesic", [](const ReportOptions& o) { return report_lift_geodesic(o); }});
  r.push_back({"lift-distance", [](const ReportOptions& o) { return report_lift_distance(o); }});
  return r;
}

struct VerifySummary {
  std::vector<CheckReport> reports;
  /// Ids whose JSON differs from the golden file (or whose golden file is missing).
  std::vector<std::string> golden_mismatches;

  Outcome outcome() const {
    if (!golden_mismatches.empty()) return Outcome::fail;
    Outcome o = Outcome::pass;
    for (const auto& r : reports) {
      if (r.outcome() == Outcome::fail) return Outcome::fail;
      if (r.outcome() == Outcome::indeterminate) o = Outcome::indeterminate;
    }
    return o;
  }
  /// 0 all pass, 1 some failure, 2 only indeterminate entries besides passes.
  int exit_code() const {
    switch (outcome()) {
      case Outcome::pass: return 0;
      case Outcome::fail: return 1;
      case Outcome::indeterminate: return 2;
    }
    return 1;
  }
  json to_json() const {
    json j;
    json list = json::array();
    for (const auto& r : reports) list.push_back(r.to_json());
    j["reports"] = std::move(list);
    j["golden_mismatches"] = golden_mismatches;
    j["outcome"] = std::string(to_string(outcome()));
    return j;
  }
};

/// Canonical text of a report, as stored in golden files.
inline std::string report_text(const CheckReport& r) { return r.to_json().dump(2) + "\n"; }

/// Runs the selected checks (all when `only` is empty). With a golden directory, each report must
/// match <dir>/<id>.json byte for byte.
inline VerifySummary verify_all(const ReportOptions& opt = {}, const std::vector<std::string>& only = {},
                                const std::optional<std::filesystem::path>& golden = std::nullopt) {
  VerifySummary s;
  for (const auto& entry : check_registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), entry.id) == only.end()) continue;
    s.reports.push_back(entry.run(opt));
    if (golden) {
      std::ifstream in(*golden / (entry.id + ".json"), std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      if (!in || buf.str() != report_text(s.reports.back())) s.golden_mismatches.push_back(entry.id);
    }
  }
  return s;
}

/// Writes one golden file per report.
inline void write_golden(const VerifySummary& s, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : s.reports) {
    std::ofstream out(dir / (r.id + ".json"), std::ios::binary);
    out << report_text(r);
  }
}

}  // namespace dirprod
