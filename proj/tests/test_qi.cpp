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

#include "dirprod/families.hpp"
#include "dirprod/qi.hpp"
#include "dirprod/reports.hpp"
#include "support.hpp"

using namespace dirprod;
using testing::code_of;

namespace {

Rational diam_of(const Graph& g) { return Rational(diam_vertices(g).value() / 16); }

}  // namespace

TEST_CASE("identity map", "[qi]") {
  const Graph c5 = cycle_graph(5);
  const auto q = qi_constants(c5, c5, {0, 1, 2, 3, 4});
  CHECK(q.alpha == Rational(1));
  CHECK(q.beta == Rational(0));
  REQUIRE(q.epsilon);
  CHECK(*q.epsilon == Rational(0));
  CHECK(q.embedding_ok);
  CHECK(q.zero_beta_alpha == Rational(1));
}

TEST_CASE("constant map collapses distances", "[qi]") {
  const Graph p4 = path_graph(4);
  const auto q = qi_constants(p4, p4, {0, 0, 0, 0});
  CHECK(q.beta == Rational(3));
  CHECK_FALSE(q.zero_beta_alpha);
  CHECK(*q.epsilon == Rational(3));
  CHECK(q.beta_at(Rational(3)) == Rational(1));
}

TEST_CASE("beta is nonincreasing in alpha", "[qi][property]") {
  const auto c = odd_factor_embedding(random_tree(7, 2), cycle_graph(5));
  const auto q = qi_constants(c.domain, c.codomain, c.map);
  Rational prev = q.beta_at(Rational(1));
  for (int k = 2; k <= 12; ++k) {
    const Rational b = q.beta_at(Rational(k, 2));
    CHECK(b <= prev);
    prev = b;
  }
  CHECK(q.beta_at(*q.zero_beta_alpha) == Rational(0));
}

TEST_CASE("slice embedding with an odd-cycle factor", "[qi]") {
  const auto c = odd_factor_embedding(path_graph(4), cycle_graph(3));
  const auto q = qi_constants(c.domain, c.codomain, c.map);
  CHECK(q.alpha == Rational(1));
  CHECK(q.within(Rational(1), Rational(3)));
  CHECK(q.full_within(Rational(4)));
  CHECK(code_of([] { odd_factor_embedding(path_graph(3), path_graph(3)); }) == ErrorCode::NoOddCycle);
}

TEST_CASE("parity embedding into a bipartite product", "[qi]") {
  const auto c = bipartite_embedding(path_graph(5), path_graph(2));
  const auto q = qi_constants(c.domain, c.codomain, c.map, c.target);
  CHECK(q.within(Rational(1), Rational(0)));
  CHECK(q.full_within(Rational(1)));
  CHECK(code_of([] { bipartite_embedding(cycle_graph(5), path_graph(2)); }) == ErrorCode::NotBipartite);
}

TEST_CASE("edge strip inclusion preserves distances exactly", "[qi]") {
  for (const auto& [g1, g2] : std::vector<std::pair<Graph, Graph>>{{cycle_graph(5), path_graph(4)},
                                                                   {dumbbell_graph(2), cycle_graph(6)},
                                                                   {complete_graph(4), random_tree(6, 3)}}) {
    const auto c = edge_inclusion(g1, g2);
    const auto dd = apsp(c.domain);
    const auto dc = apsp(c.codomain);
    for (VertexId a = 0; a < c.domain.order(); ++a)
      for (VertexId b = 0; b < c.domain.order(); ++b) CHECK(dd(a, b) == dc(c.map[a], c.map[b]));
    CHECK(qi_constants(c.domain, c.codomain, c.map).full_within(diam_of(g2)));
  }
}

TEST_CASE("extension of vertex maps", "[qi]") {
  const Graph c5 = cycle_graph(5);
  CHECK(nearest_vertex(Point::midpoint(c5, 0, 1)) == 0);
  CHECK(nearest_vertex(Point::on_edge(c5, 0, 1, 9)) == 1);
  CHECK(nearest_vertex(Point::on_edge(c5, 0, 1, 7)) == 0);

  // Rounding to the nearest vertex moves points by up to 1/2: the midpoints of (0,1) and (0,4)
  // are one apart but both land on 0, so the extended identity meets the (1, 1) bound exactly.
  const auto id = extend_vertex_map(c5, c5, {0, 1, 2, 3, 4});
  CHECK(id.qi.within(Rational(1), Rational(1)));
  CHECK(id.qi.beta_at(Rational(1)) == Rational(1));
  REQUIRE(id.fullness);
  CHECK(*id.fullness == Rational(1, 2));

  const auto c = odd_factor_embedding(path_graph(4), cycle_graph(3));
  const auto f = qi_constants(c.domain, c.codomain, c.map);
  const auto g = extend_vertex_map(c.domain, c.codomain, c.map);
  CHECK(g.qi.within(Rational(1), Rational(4)));
  CHECK(g.qi.within(Rational(1), Rational(1) + f.beta));
  REQUIRE(g.fullness);
  CHECK(*g.fullness <= *f.epsilon + Rational(1, 2));
}

TEST_CASE("lifts of walks", "[qi]") {
  const Graph c3 = cycle_graph(3);
  const auto g1 = lift_gamma(c3, {0, 1, 2}, 1);
  CHECK(g1 == std::vector<VertexId>{0, 3, 4});
  const auto g2 = lift_gamma(c3, {0, 1, 2}, 2);
  CHECK(g2 == std::vector<VertexId>{1, 2, 5});
  std::vector<VertexId> swapped;
  for (VertexId x : g1) swapped.push_back(swap_p2(x));
  CHECK(swapped == g2);
  CHECK(code_of([&] { lift_gamma(c3, {0, 0}, 1); }) == ErrorCode::NotAWalk);

  const Graph p4 = path_graph(4);
  const auto lifted = lift_gamma(p4, {0, 1, 2, 3}, 1);
  const auto prod = direct_product(p4, path_graph(2)).graph;
  CHECK(is_geodesic(prod, lifted));
  CHECK(bfs_hops(prod, lifted.front())[lifted.back()] == 3);
}

TEST_CASE("lifts of geodesics are geodesics", "[qi][property]") {
  for (const auto& [name, g] : default_corpus()) {
    INFO(name);
    const auto prod = direct_product(g, path_graph(2)).graph;
    for (const auto& path : short_geodesics(g, 6)) {
      CHECK(is_geodesic(prod, lift_gamma(g, path, 1)));
      CHECK(is_geodesic(prod, lift_gamma(g, path, 2)));
    }
  }
}

TEST_CASE("lift distance inequalities", "[qi]") {
  const Graph d6 = dumbbell_graph(6);
  const VertexPath bridge{2, 3, 4, 5, 6, 7, 8};
  const auto c = check_lift_distance(d6, bridge, 3);
  CHECK(c.lhs == 9);
  CHECK(c.dist == 3);
  CHECK(c.holds());
  CHECK(lifted_endpoint_distance(d6, bridge) == Dist16::edges(9));
  CHECK(c.delta == delta_exact(d6).delta);

  const auto e = check_lift_distance(cycle_graph(5), {0, 1}, 0);
  CHECK(e.dist == 0);
  CHECK(e.lhs >= 1);
  CHECK(e.holds());

  const Graph cp = cycle_with_pendant_graph(3, 4);
  const auto t = check_lift_distance(cp, {0, 3, 4, 5, 6}, 4);
  CHECK(t.dist == 4);
  CHECK(t.lhs > 2);
  CHECK(t.holds());

  CHECK(code_of([] { check_lift_distance(path_graph(4), {0, 1}, 0); }) == ErrorCode::NoOddCycle);
  CHECK(code_of([] { check_lift_distance(cycle_graph(5), {0, 1, 2, 3}, 0); }) == ErrorCode::NotAGeodesic);
}

TEST_CASE("ball collapse", "[qi]") {
  const Graph c5 = cycle_graph(5);
  const auto one = collapse_balls(c5, {{0, 1}});
  CHECK(one.graph.order() == 5);
  CHECK(one.graph.size() == 5);
  CHECK(one.map[0] == one.stars[0]);
  CHECK(qi_constants(c5, one.graph, one.map).within(Rational(1), Rational(0)));

  const Graph d4 = dumbbell_graph(4);
  const auto two = collapse_balls(d4, {{2, 1}, {6, 1}});
  const auto q = qi_constants(d4, two.graph, two.map);
  CHECK(q.within(Rational(1), Rational(2)));
  CHECK(q.full_within(Rational(0)));

  CHECK(code_of([] { collapse_balls(dumbbell_graph(2), {{2, 2}, {4, 2}}); }) == ErrorCode::OverlappingBalls);
  CHECK(code_of([] { collapse_balls(dumbbell_graph(4), {{2, 1}}); }) == ErrorCode::UncoveredOddCycle);
}

TEST_CASE("regularity of ball families", "[qi]") {
  const Graph d6 = dumbbell_graph(6);
  const std::vector<BallSpec> balls{{2, 1}, {8, 1}};
  const auto r4 = is_M_regular(d6, balls, 4);
  CHECK(r4.regular);
  CHECK(r4.least_m == 4);
  CHECK_FALSE(is_M_regular(d6, balls, 3).regular);
  CHECK(is_M_regular(d6, balls, std::nullopt).regular);
  const auto bip = is_M_regular(path_graph(5), {{2, 1}}, std::nullopt);
  CHECK_FALSE(bip.regular);
  CHECK_FALSE(bip.reason.empty());
}

TEST_CASE("collapsing ball slabs of the product with P2", "[qi]") {
  const Graph d4 = dumbbell_graph(4);
  const auto ps = product_star(d4, {{2, 1}, {6, 1}}, 4);
  CHECK(ps.m == 4);
  const int bound = 4 * ps.max_radius + ps.m;
  const auto dom = direct_product(d4, path_graph(2)).graph;
  const auto q = qi_constants(dom, ps.graph, ps.map);
  CHECK(q.within(Rational(bound + 1), Rational(bound)));
  CHECK(q.full_within(Rational(0)));

  const auto tri = product_star(cycle_graph(3), {{0, 2}}, 4);
  CHECK(tri.graph.order() == 1);
  CHECK(qi_constants(direct_product(cycle_graph(3), path_graph(2)).graph, tri.graph, tri.map).embedding_ok);

  CHECK(code_of([] { product_star(dumbbell_graph(4), {{2, 1}, {6, 1}}, 3); }) == ErrorCode::NotMRegular);
  CHECK(code_of([] { product_star(path_graph(5), {{2, 1}}, 4); }) == ErrorCode::NotMRegular);
}
