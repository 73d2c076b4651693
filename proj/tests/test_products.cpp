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

#include <algorithm>
#include <set>

#include "dirprod/families.hpp"
#include "dirprod/geodesic.hpp"
#include "dirprod/parity.hpp"
#include "dirprod/product.hpp"
#include "dirprod/reports.hpp"
#include "support.hpp"

using namespace dirprod;
using testing::code_of;

namespace {

// Shortest walk of each parity by stepping reachable sets forward; walks longer than 2n + 1 never
// help.
std::vector<ParityEntry> walk_oracle(const Graph& g, VertexId s) {
  const int n = g.order();
  std::vector<ParityEntry> out(static_cast<std::size_t>(n));
  std::vector<char> at(static_cast<std::size_t>(n), 0);
  at[s] = 1;
  for (int len = 0; len <= 2 * n + 1; ++len) {
    for (VertexId v = 0; v < n; ++v) {
      if (!at[v]) continue;
      auto& slot = len % 2 == 0 ? out[v].even : out[v].odd;
      if (!slot) slot = len;
    }
    std::vector<char> next(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v)
      if (at[v])
        for (VertexId w : g.neighbors(v)) next[w] = 1;
    at = std::move(next);
  }
  return out;
}

std::set<std::pair<VertexId, VertexId>> edge_set(const Graph& g) {
  std::set<std::pair<VertexId, VertexId>> s;
  for (const auto& e : g.edges()) s.emplace(e.u, e.v);
  return s;
}

}  // namespace

TEST_CASE("direct product shapes", "[products]") {
  const auto p2p2 = direct_product(path_graph(2), path_graph(2));
  CHECK(p2p2.graph.order() == 4);
  CHECK(p2p2.graph.size() == 2);
  CHECK(components(p2p2.graph).size() == 2);

  const auto k3k3 = direct_product(complete_graph(3), complete_graph(3));
  CHECK(k3k3.graph.order() == 9);
  CHECK(k3k3.graph.size() == 18);
  CHECK(is_connected(k3k3.graph));
  for (VertexId v = 0; v < 9; ++v) CHECK(k3k3.graph.degree(v) == 4);

  // C3 x P2 is a hexagon.
  const auto c3p2 = direct_product(cycle_graph(3), path_graph(2));
  CHECK(c3p2.graph.order() == 6);
  CHECK(is_connected(c3p2.graph));
  for (VertexId v = 0; v < 6; ++v) CHECK(c3p2.graph.degree(v) == 2);

  CHECK(code_of([] { direct_product(Graph{}, path_graph(2)); }) == ErrorCode::EmptyGraph);
}

TEST_CASE("product index is a bijection", "[products]") {
  const ProductIndex idx{4, 3};
  std::set<VertexId> seen;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) {
      const VertexId x = idx.id(i, j);
      CHECK(x == i * 3 + j);
      CHECK(idx.first(x) == i);
      CHECK(idx.second(x) == j);
      seen.insert(x);
    }
  CHECK(seen.size() == 12);
}

TEST_CASE("component count prediction", "[products]") {
  CHECK(predict_component_count({false, false}) == 1);
  CHECK(predict_component_count({true, true}) == 2);
  CHECK(predict_component_count({true, true, true}) == 4);
  CHECK(predict_component_count({true, false}) == 1);
}

TEST_CASE("products of corpus pairs: counts, commutativity, degrees", "[products][property]") {
  const auto pairs = detail::random_factor_pairs(25, 11);
  for (const auto& [g1, g2] : pairs) {
    const auto p = direct_product(g1, g2);
    CHECK(p.graph.size() == 2 * g1.size() * g2.size());
    CHECK(static_cast<std::int64_t>(components(p.graph).size()) ==
          predict_component_count({is_bipartite(g1).has_value(), is_bipartite(g2).has_value()}));
    for (VertexId x = 0; x < p.graph.order(); ++x)
      CHECK(p.graph.degree(x) == g1.degree(p.index.first(x)) * g2.degree(p.index.second(x)));

    // Swapping coordinates maps the edge set of G1 x G2 onto that of G2 x G1.
    const auto q = direct_product(g2, g1);
    std::set<std::pair<VertexId, VertexId>> swapped;
    for (const auto& e : p.graph.edges()) {
      const VertexId a = q.index.id(p.index.second(e.u), p.index.first(e.u));
      const VertexId b = q.index.id(p.index.second(e.v), p.index.first(e.v));
      swapped.emplace(std::min(a, b), std::max(a, b));
    }
    CHECK(swapped == edge_set(q.graph));
  }
}

TEST_CASE("parity distances", "[parity]") {
  const auto c5 = parity_distances(cycle_graph(5), 0);
  CHECK(c5[1].odd == 1);
  CHECK(c5[1].even == 4);
  CHECK(c5[2].even == 2);
  CHECK(c5[2].odd == 3);

  const auto p3 = parity_distances(path_graph(3), 0);
  CHECK(p3[0].even == 0);
  CHECK_FALSE(p3[1].even);
  CHECK(p3[2].even == 2);
  CHECK_FALSE(p3[0].odd);
  CHECK(p3[1].odd == 1);
  CHECK_FALSE(p3[2].odd);

  const auto k3 = parity_distances(complete_graph(3), 0);
  CHECK(k3[0].even == 0);
  CHECK(k3[0].odd == 3);
}

TEST_CASE("parity distances match walk enumeration", "[parity][property]") {
  for (const auto& [name, g] : default_corpus()) {
    INFO(name);
    const bool bip = is_bipartite(g).has_value();
    for (VertexId s = 0; s < g.order(); ++s) {
      const auto row = parity_distances(g, s);
      const auto expect = walk_oracle(g, s);
      const auto hops = bfs_hops(g, s);
      for (VertexId v = 0; v < g.order(); ++v) {
        CHECK(row[v] == expect[v]);
        if (hops[v] == kUnreached) continue;
        // The entry of the distance's parity is the distance itself.
        CHECK(row[v].of_parity(hops[v] % 2) == hops[v]);
        if (bip) CHECK_FALSE(row[v].of_parity(1 - hops[v] % 2));
      }
    }
  }
}

TEST_CASE("closed-form product distances", "[parity]") {
  const Graph c5 = cycle_graph(5);
  const Graph p3 = path_graph(3);
  const auto a = parity_distances(c5, 0);
  const auto b = parity_distances(p3, 0);
  CHECK(product_distance(a[1], b[0]) == Dist16::edges(4));
  CHECK(product_distance(a[2], b[2]) == Dist16::edges(2));
  CHECK(realizing_parity(a[1], b[0]) == 0);
  const auto pp = parity_distances(p3, 0);
  CHECK(product_distance(pp[0], pp[1]).is_infinite());
  CHECK_FALSE(realizing_parity(pp[0], pp[1]));

  const auto gap = lower_bound_gap(c5, p3, 0, 0, 1, 0);
  CHECK(gap.product == Dist16::edges(4));
  CHECK(gap.factor_max == Dist16::edges(1));
  const auto same = lower_bound_gap(c5, p3, 2, 1, 2, 1);
  CHECK(same.product == Dist16::edges(0));
  CHECK(same.factor_max == Dist16::edges(0));
}

TEST_CASE("closed-form product distance equals BFS on the product", "[parity][property]") {
  for (const auto& [g1, g2] : detail::random_factor_pairs(20, 5)) {
    const auto p = direct_product(g1, g2);
    const ParityTable t1(g1);
    const ParityTable t2(g2);
    for (VertexId x = 0; x < p.graph.order(); ++x) {
      const auto hops = bfs_hops(p.graph, x);
      for (VertexId y = 0; y < p.graph.order(); ++y) {
        const Dist16 d = product_distance(t1(p.index.first(x), p.index.first(y)),
                                          t2(p.index.second(x), p.index.second(y)));
        if (hops[y] == kUnreached) {
          CHECK(d.is_infinite());
        } else {
          CHECK(d == Dist16::edges(hops[y]));
        }
        const int h1 = bfs_hops(g1, p.index.first(x))[p.index.first(y)];
        const int h2 = bfs_hops(g2, p.index.second(x))[p.index.second(y)];
        if (d.is_finite()) {
          CHECK(Dist16::edges(std::max(h1, h2)) <= d);
          // Equal-parity factor distances close the gap.
          if (h1 % 2 == h2 % 2) CHECK(d == Dist16::edges(std::max(h1, h2)));
        }
      }
    }
  }
}

TEST_CASE("cycle-path distance formula", "[parity]") {
  CHECK(cmxpn_distance(5, 4, 1, 1, 2, 2) == 1);
  CHECK(cmxpn_distance(5, 4, 1, 1, 2, 1) == 4);
  CHECK(cmxpn_distance(3, 2, 1, 1, 1, 2) == 3);
  CHECK(code_of([] { cmxpn_distance(5, 4, 0, 1, 1, 1); }) == ErrorCode::BadCoordinate);
  CHECK(code_of([] { cmxpn_distance(5, 4, 1, 5, 1, 1); }) == ErrorCode::BadCoordinate);
  CHECK(code_of([] { cmxpn_distance(4, 4, 1, 1, 1, 1); }) == ErrorCode::BadParameter);
}

TEST_CASE("cycle-path distance formula equals BFS", "[parity][property]") {
  for (int m = 3; m <= 7; m += 2)
    for (int n = 2; n <= 9; ++n) {
      const auto p = direct_product(cycle_graph(m), path_graph(n));
      for (VertexId x = 0; x < p.graph.order(); ++x) {
        const auto hops = bfs_hops(p.graph, x);
        for (VertexId y = 0; y < p.graph.order(); ++y) {
          const int j = p.index.first(x) + 1, i = p.index.second(x) + 1;
          const int r = p.index.first(y) + 1, s = p.index.second(y) + 1;
          if (hops[y] == kUnreached) continue;
          CHECK(cmxpn_distance(m, n, j, i, r, s) == hops[y]);
        }
      }
    }
}

TEST_CASE("walks of every parity pad by two", "[parity][property]") {
  for (const Graph& g : {cycle_with_pendant_graph(5, 3), dumbbell_graph(3), path_graph(5)}) {
    for (VertexId s = 0; s < g.order(); ++s) {
      const auto row = parity_distances(g, s);
      for (VertexId v = 0; v < g.order(); ++v) {
        for (int parity : {0, 1}) {
          const auto len = row[v].of_parity(parity);
          if (!len || g.degree(v) == 0) continue;
          // A shortest walk followed by one step out and back.
          VertexPath walk = enumerate_geodesics(g, s, v, 1000).front();
          while (static_cast<int>(walk.size()) - 1 < *len) {
            walk.push_back(g.neighbors(walk.back())[0]);
            walk.push_back(walk[walk.size() - 2]);
          }
          if (static_cast<int>(walk.size()) - 1 != *len) continue;
          const VertexId w = g.neighbors(v)[0];
          walk.push_back(w);
          walk.push_back(v);
          CHECK(is_walk(g, walk));
          CHECK(static_cast<int>(walk.size()) - 1 == *len + 2);
        }
      }
    }
  }
}
