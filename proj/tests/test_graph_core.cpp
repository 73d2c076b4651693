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

#include "dirprod/edge_list.hpp"
#include "dirprod/families.hpp"
#include "dirprod/graph.hpp"
#include "dirprod/reports.hpp"
#include "support.hpp"

using namespace dirprod;

using testing::code_of;

TEST_CASE("build_graph normalizes and rejects non-simple input", "[graph]") {
  const Graph c3 = build_graph({{0, 1}, {1, 2}, {2, 0}}, 3);
  CHECK(c3.order() == 3);
  CHECK(c3.size() == 3);
  for (VertexId v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);
  CHECK(c3.adjacent(2, 0));
  CHECK(code_of([] { build_graph({{0, 1}, {0, 1}}, 2); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { build_graph({{1, 0}, {0, 1}}, 2); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { build_graph({{0, 0}}, 1); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { build_graph({{0, 3}}, 3); }) == ErrorCode::BadId);
}

TEST_CASE("neighbor lists are sorted and symmetric", "[graph]") {
  const Graph g = random_graph(10, 0.5, 7);
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (VertexId w : nb) CHECK(g.adjacent(w, v));
  }
}

TEST_CASE("all-pairs distances", "[graph]") {
  const auto c5 = apsp(cycle_graph(5));
  CHECK(c5(0, 2) == Dist16::sixteenths(32));
  const auto p4 = apsp(path_graph(4));
  CHECK(p4(0, 3) == Dist16::sixteenths(48));
  const auto two = apsp(build_graph({{0, 1}, {2, 3}}, 4));
  CHECK(two(0, 2).is_infinite());
  CHECK(two(0, 1) == Dist16::edges(1));
}

TEST_CASE("distance matrices are metrics on the corpus", "[graph][property]") {
  for (const auto& [name, g] : default_corpus()) {
    INFO(name);
    const auto d = apsp(g);
    for (VertexId a = 0; a < g.order(); ++a) {
      CHECK(d(a, a) == Dist16::edges(0));
      for (VertexId b = 0; b < g.order(); ++b) {
        CHECK(d(a, b) == d(b, a));
        for (VertexId c = 0; c < g.order(); ++c) CHECK(d(a, c) <= d(a, b) + d(b, c));
      }
    }
  }
}

TEST_CASE("points canonicalize orientation and endpoints", "[graph]") {
  const Graph c5 = cycle_graph(5);
  const Point p = Point::on_edge(c5, 1, 0, 4);
  const Point q = Point::on_edge(c5, 0, 1, 12);
  CHECK(p == q);
  CHECK(p.lower() == 0);
  CHECK(p.offset() == 12);
  CHECK(Point::on_edge(c5, 0, 1, 0) == Point::vertex(0));
  CHECK(Point::on_edge(c5, 0, 1, 16) == Point::vertex(1));
  CHECK(Point::midpoint(c5, 3, 2).is_midpoint());
}

TEST_CASE("subdivision", "[graph]") {
  const auto s = subdivide(path_graph(2), 2);
  CHECK(s.graph.order() == 3);
  CHECK(s.graph.size() == 2);
  CHECK(is_connected(s.graph));
  const auto c6 = subdivide(cycle_graph(3), 2);
  CHECK(c6.graph.order() == 6);
  for (VertexId v = 0; v < 6; ++v) CHECK(c6.graph.degree(v) == 2);

  // Midpoint of (0,1) in C5 is 5/2 from vertex 3.
  const Graph c5 = cycle_graph(5);
  const auto s4 = subdivide(c5, 4);
  const VertexId mid = s4.node_of(Point::midpoint(c5, 0, 1));
  CHECK(bfs_hops(s4.graph, mid)[3] == 10);
  CHECK(point_distance(apsp(c5), Point::midpoint(c5, 0, 1), Point::vertex(3)) == Dist16::sixteenths(40));
  CHECK(code_of([&] { subdivide(c5, 3); }) == ErrorCode::BadParameter);
}

TEST_CASE("subdivision scales vertex distances exactly", "[graph][property]") {
  for (const auto& [name, g] : default_corpus()) {
    INFO(name);
    for (int k : {2, 4, 8}) {
      const auto s = subdivide(g, k);
      for (VertexId a = 0; a < g.order(); ++a) {
        const auto base = bfs_hops(g, a);
        const auto fine = bfs_hops(s.graph, a);
        for (VertexId b = 0; b < g.order(); ++b) {
          if (base[b] == kUnreached) {
            CHECK(fine[b] == kUnreached);
          } else {
            CHECK(fine[b] == k * base[b]);
          }
        }
      }
    }
  }
}

TEST_CASE("point distances agree with the sixteenfold subdivision", "[graph][property]") {
  const Graph g = random_graph(7, 0.45, 3);
  const auto d = apsp(g);
  const auto s = subdivide(g, 16);
  for (VertexId a = 0; a < s.graph.order(); a += 5) {
    const auto hops = bfs_hops(s.graph, a);
    for (VertexId b = 0; b < s.graph.order(); b += 3) {
      const Dist16 got = point_distance(d, s.points[a], s.points[b]);
      if (hops[b] == kUnreached) {
        CHECK(got.is_infinite());
      } else {
        CHECK(got == Dist16::sixteenths(hops[b]));
      }
    }
  }
}

TEST_CASE("diameters", "[graph]") {
  CHECK(diam_vertices(cycle_graph(5)) == Dist16::edges(2));
  CHECK(diam_continuous(cycle_graph(5)) == Dist16::sixteenths(40));
  CHECK(diam_vertices(path_graph(4)) == Dist16::edges(3));
  CHECK(diam_continuous(path_graph(4)) == Dist16::edges(3));
  CHECK(diam_vertices(cycle_graph(6)) == Dist16::edges(3));
  CHECK(diam_continuous(cycle_graph(6)) == Dist16::edges(3));
  CHECK(diam_vertices(build_graph({{0, 1}, {2, 3}}, 4)).is_infinite());
}

TEST_CASE("continuous and vertex diameters differ by at most one edge", "[graph][property]") {
  for (const auto& [name, g] : default_corpus()) {
    if (!is_connected(g)) continue;
    INFO(name);
    const auto gap = diam_continuous(g).value() - diam_vertices(g).value();
    CHECK((gap == 0 || gap == 8 || gap == 16));
    if (is_bipartite(g)) CHECK(gap == 0);
  }
}

TEST_CASE("bipartition and components", "[graph]") {
  const auto b = is_bipartite(cycle_graph(6));
  REQUIRE(b);
  CHECK(b->side0 == std::vector<VertexId>{0, 2, 4});
  CHECK(b->side1 == std::vector<VertexId>{1, 3, 5});
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  const Graph p3p2 = build_graph({{0, 1}, {1, 2}, {3, 4}}, 5);
  const auto cs = components(p3p2);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(cs[1] == std::vector<VertexId>{3, 4});
}

TEST_CASE("edge list text format", "[graph][io]") {
  const Graph g = parse_edge_list("# a triangle\n0 1\n1 2\n\n2 0\n");
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  const Graph h = parse_edge_list("n 5\n0 1\n");
  CHECK(h.order() == 5);
  CHECK(parse_edge_list(to_edge_list(h)).edges() == h.edges());
  CHECK(code_of([] { parse_edge_list("0 x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("0 1 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("0 1\n1 0\n"); }) == ErrorCode::DuplicateEdge);
}

TEST_CASE("family generators", "[families]") {
  const Graph p2 = generate({FamilyKind::path, 2});
  CHECK(p2.order() == 2);
  CHECK(p2.size() == 1);
  const Graph c5 = generate({FamilyKind::cycle, 5});
  CHECK(c5.size() == 5);
  const Graph d6 = dumbbell_graph(6);
  CHECK(d6.order() == 11);
  CHECK(d6.size() == 12);
  CHECK(d6.adjacent(0, 1));
  CHECK(d6.adjacent(1, 2));
  CHECK(d6.adjacent(0, 2));
  CHECK(bfs_hops(d6, 2)[8] == 6);
  CHECK(d6.adjacent(8, 9));
  CHECK(d6.adjacent(9, 10));
  CHECK(d6.adjacent(8, 10));
  const Graph cp = cycle_with_pendant_graph(3, 4);
  CHECK(cp.order() == 7);
  CHECK(bfs_hops(cp, 0)[6] == 4);
  CHECK(complete_graph(5).size() == 10);
  CHECK(complete_bipartite_graph(2, 3).size() == 6);
  CHECK(code_of([] { cycle_graph(2); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { path_graph(0); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { dumbbell_graph(0); }) == ErrorCode::BadParameter);
  CHECK(parse_family_kind("cycle-with-pendant") == FamilyKind::cycle_with_pendant);
}

TEST_CASE("generators are deterministic and respect parity", "[families][property]") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(to_edge_list(random_tree(9, seed)) == to_edge_list(random_tree(9, seed)));
    CHECK(to_edge_list(random_graph(9, 0.4, seed)) == to_edge_list(random_graph(9, 0.4, seed)));
    const Graph t = random_tree(9, seed);
    CHECK(t.size() == 8);
    CHECK(is_connected(t));
    CHECK(is_bipartite(t));
  }
  for (int m = 1; m <= 9; ++m) CHECK(is_bipartite(path_graph(m)));
}
