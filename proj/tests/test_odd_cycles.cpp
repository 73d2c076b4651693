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
#include <cmath>
#include <functional>

#include "dirprod/families.hpp"
#include "dirprod/odd_cycles.hpp"
#include "dirprod/reports.hpp"
#include "support.hpp"

using namespace dirprod;
using testing::code_of;

namespace {

const Graph& c5_chord() {
  static const Graph g = build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}, 5);
  return g;
}

// Every simple cycle, by brute-force DFS from its smallest vertex.
std::vector<std::vector<VertexId>> all_cycles(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    for (VertexId w : g.neighbors(v)) {
      if (w == path.front() && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= path.front() || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (VertexId s = 0; s < g.order(); ++s) {
    path = {s};
    used[s] = 1;
    dfs(s);
    used[s] = 0;
  }
  return out;
}

// Isometry straight from the definition: cycle distance equals graph distance for all pairs.
bool isometric_by_definition(const Graph& g, const std::vector<VertexId>& c) {
  const int l = static_cast<int>(c.size());
  for (int a = 0; a < l; ++a) {
    const auto hops = bfs_hops(g, c[a]);
    for (int b = 0; b < l; ++b) {
      const int along = std::min(std::abs(a - b), l - std::abs(a - b));
      if (hops[c[b]] != along) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("odd girth", "[cycles]") {
  CHECK(odd_girth(cycle_graph(5)) == 5);
  CHECK_FALSE(odd_girth(path_graph(6)));
  CHECK(odd_girth(complete_graph(4)) == 3);
  CHECK(odd_girth(cycle_with_pendant_graph(7, 2)) == 7);
  const auto c = shortest_odd_cycle(dumbbell_graph(4));
  REQUIRE(c);
  CHECK(c->size() == 3);
}

TEST_CASE("isometric cycles", "[cycles]") {
  CHECK(is_isometric_cycle(cycle_graph(5), {0, 1, 2, 3, 4}));
  CHECK_FALSE(is_isometric_cycle(c5_chord(), {0, 1, 2, 3, 4}));
  CHECK(is_isometric_cycle(c5_chord(), {0, 1, 2}));
  CHECK(code_of([] { is_isometric_cycle(cycle_graph(5), {0, 1, 3}); }) == ErrorCode::BadCycle);
  CHECK(code_of([] { is_isometric_cycle(cycle_graph(5), {0, 1}); }) == ErrorCode::BadCycle);
}

TEST_CASE("cycle reduction", "[cycles]") {
  CHECK_FALSE(reduce_cycle(cycle_graph(5), {0, 1, 2, 3, 4}));
  const auto r = reduce_cycle(c5_chord(), {0, 1, 2, 3, 4});
  REQUIRE(r);
  CHECK(r->cycle == std::vector<VertexId>{0, 1, 2});
  CHECK(r->shortcut.size() == 2);
  CHECK_FALSE(reduce_cycle(complete_graph(4), {0, 1, 2}));
  CHECK(code_of([] { reduce_cycle(cycle_graph(6), {0, 1, 2, 3, 4, 5}); }) == ErrorCode::EvenCycle);

  const auto cert = certify_cycle(c5_chord(), {2, 3, 4, 0, 1});
  CHECK(cert.vertices == std::vector<VertexId>{0, 1, 2, 3, 4});
  CHECK(cert.odd);
  CHECK_FALSE(cert.isometric);
  CHECK_FALSE(cert.minimal());
}

TEST_CASE("minimal cycles", "[cycles]") {
  const auto c5 = minimal_cycles(cycle_graph(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].vertices == std::vector<VertexId>{0, 1, 2, 3, 4});
  const auto d6 = minimal_cycles(dumbbell_graph(6));
  REQUIRE(d6.size() == 2);
  CHECK(d6[0].vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(d6[1].vertices == std::vector<VertexId>{8, 9, 10});
  CHECK(minimal_cycles(cycle_graph(6)).empty());
  CHECK(minimal_cycles(cycle_graph(7), 5).empty());
}

TEST_CASE("distance to minimal cycles", "[cycles]") {
  for (const auto& d : dist_to_minimal_cycles(cycle_graph(5))) CHECK(d == Dist16::edges(0));
  const auto d6 = dist_to_minimal_cycles(dumbbell_graph(6));
  CHECK(d6[5] == Dist16::edges(3));
  const std::vector<int> expected{0, 0, 0, 1, 2, 3, 2, 1, 0, 0, 0};
  for (std::size_t v = 0; v < expected.size(); ++v) CHECK(d6[v] == Dist16::edges(expected[v]));
  for (const auto& d : dist_to_minimal_cycles(path_graph(5))) CHECK(d.is_infinite());
}

TEST_CASE("minimal, isometric and shortcut-free agree on every odd cycle", "[cycles][property]") {
  for (const auto& [name, g] : default_corpus()) {
    if (g.order() > 10) continue;
    INFO(name);
    std::vector<std::vector<VertexId>> minimal;
    for (const auto& c : all_cycles(g)) {
      const auto cert = certify_cycle(g, c);
      CHECK(cert.isometric == isometric_by_definition(g, c));
      if (!cert.odd) continue;
      CHECK(cert.minimal() == cert.isometric);
      if (cert.reduction) {
        const auto& red = *cert.reduction;
        CHECK(red.cycle.size() % 2 == 1);
        CHECK(red.cycle.size() + 2 <= c.size());
        validate_cycle(g, red.cycle);
        // Shortcut meets the cycle only at its ends and beats the arc it replaces.
        for (std::size_t i = 1; i + 1 < red.shortcut.size(); ++i)
          CHECK(std::find(c.begin(), c.end(), red.shortcut[i]) == c.end());
        const auto pos = [&](VertexId v) { return std::find(c.begin(), c.end(), v) - c.begin(); };
        const auto gap = std::abs(pos(red.shortcut.front()) - pos(red.shortcut.back()));
        const auto along = std::min<long>(gap, static_cast<long>(c.size()) - gap);
        CHECK(static_cast<long>(red.shortcut.size()) - 1 < along);
        // Iterated reduction ends at a minimal cycle.
        auto cur = red.cycle;
        while (auto next = reduce_cycle(g, cur)) {
          CHECK(next->cycle.size() < cur.size());
          cur = next->cycle;
        }
        CHECK(certify_cycle(g, cur).minimal());
      } else {
        minimal.push_back(canonical_cycle(c));
      }
    }
    std::vector<std::vector<VertexId>> found;
    for (const auto& c : minimal_cycles(g, g.order())) found.push_back(c.vertices);
    std::sort(minimal.begin(), minimal.end());
    std::sort(found.begin(), found.end());
    CHECK(found == minimal);
    // The default bound loses nothing.
    CHECK(minimal_cycles(g).size() == minimal.size());
  }
}

TEST_CASE("minimal cycles are at most four times the thin constant", "[cycles][property]") {
  for (const auto& [name, g] : default_corpus()) {
    if (!odd_girth(g)) continue;
    INFO(name);
    const auto d = delta_exact(g);
    REQUIRE(d.mode == DeltaMode::exact);
    for (const auto& c : minimal_cycles(g)) CHECK(Dist16::edges(c.length) <= Dist16::sixteenths(4 * d.delta.value()));
  }
}
