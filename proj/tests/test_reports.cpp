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

#include <filesystem>
#include <fstream>
#include <set>

#include "dirprod.hpp"
#include "support.hpp"

using namespace dirprod;
using testing::code_of;

namespace {

const Instance& find(const CheckReport& r, const json& params) {
  for (const auto& i : r.instances)
    if (i.params == params) return i;
  FAIL("no instance with " << params.dump());
  return r.instances.front();
}

}  // namespace

TEST_CASE("cycle times path report", "[reports]") {
  const auto r = report_cmxpn({3, 5}, {4, 6, 8, 9}, {});
  CHECK(r.outcome() == Outcome::pass);
  CHECK(*find(r, {{"m", 5}, {"n", 4}}).expected == Rational(5, 2));
  CHECK(*find(r, {{"m", 3}, {"n", 6}}).expected == Rational(5, 2));
  CHECK(*find(r, {{"m", 3}, {"n", 8}}).expected == Rational(5, 2));
  CHECK(*find(r, {{"m", 5}, {"n", 9}}).computed == Rational(4));
  CHECK(code_of([] { report_cmxpn({4}, {2}); }) == ErrorCode::BadParameter);
}

TEST_CASE("path times path report", "[reports]") {
  const auto r = report_pmxpn({5, 6, 7}, {2, 4}, {});
  CHECK(r.outcome() == Outcome::pass);
  CHECK(*find(r, {{"m", 7}, {"n", 2}}).computed == Rational(0));
  CHECK(*find(r, {{"m", 5}, {"n", 4}}).expected == Rational(2));
  const auto& b = find(r, {{"m", 6}, {"n", 4}});
  CHECK_FALSE(b.expected);
  CHECK(*b.lower == Rational(2));
  CHECK(*b.upper == Rational(5, 2));
}

TEST_CASE("bipartite report", "[reports]") {
  const auto r = report_bipartite(path_graph(5), path_graph(4));
  CHECK(r.outcome() == Outcome::pass);
  CHECK(*r.instances[0].computed == Rational(2));
  const auto c6 = report_bipartite(cycle_graph(6), cycle_graph(6));
  CHECK(*c6.instances[0].computed == Rational(3, 2));
  CHECK(report_bipartite(path_graph(9), path_graph(2)).outcome() == Outcome::pass);
  CHECK(code_of([] { report_bipartite(cycle_graph(5), path_graph(2)); }) == ErrorCode::NotBipartite);
}

TEST_CASE("growth reports", "[reports]") {
  const auto u = report_unbounded_growth({9});
  CHECK(u.outcome() == Outcome::pass);
  CHECK(*u.instances[0].computed >= Rational(3));
  const auto p = report_p2_growth({4, 8, 16});
  CHECK(p.outcome() == Outcome::pass);
  CHECK(*p.instances[0].computed < *p.instances[2].computed);
}

TEST_CASE("every check is registered once and passes", "[reports]") {
  const std::set<std::string> expected{
      "product-distance", "component-count",     "thin-invariants",     "odd-cycle-bound",
      "isometric-subgraph", "cycle-path-product", "path-path-product",   "bipartite-product",
      "unbounded-growth", "p2-growth",           "vertex-extension",    "odd-factor-embedding",
      "bipartite-embedding", "edge-inclusion",   "cycle-density",       "ball-collapse",
      "product-star",     "lift-geodesic",       "lift-distance"};
  std::set<std::string> ids;
  for (const auto& e : check_registry()) CHECK(ids.insert(e.id).second);
  CHECK(ids == expected);

  ReportOptions opt;
  opt.jobs = 4;
  const auto s = verify_all(opt);
  CHECK(s.reports.size() == expected.size());
  for (const auto& r : s.reports) {
    INFO(r.id);
    CHECK(r.outcome() == Outcome::pass);
    CHECK_FALSE(r.instances.empty());
  }
  CHECK(s.exit_code() == 0);
}

TEST_CASE("tiny budgets are indeterminate, not failures", "[reports]") {
  ReportOptions opt;
  opt.budget = 1;
  const auto s = verify_all(opt, {"cycle-path-product", "thin-invariants", "product-distance"});
  CHECK(s.outcome() == Outcome::indeterminate);
  CHECK(s.exit_code() == 2);
  REQUIRE(s.reports.size() == 3);
  // Reports come back in registry order.
  CHECK(s.reports[0].id == "product-distance");
  CHECK(s.reports[0].outcome() == Outcome::pass);
  CHECK(s.reports[2].id == "cycle-path-product");
  CHECK(s.reports[2].count(Outcome::indeterminate) > 0);
  CHECK(s.reports[2].count(Outcome::fail) == 0);
}

TEST_CASE("reports are byte-stable across worker counts", "[reports]") {
  const std::vector<std::string> ids{"cycle-path-product", "thin-invariants", "product-star", "p2-growth"};
  ReportOptions one;
  ReportOptions many;
  many.jobs = 8;
  const auto a = verify_all(one, ids);
  const auto b = verify_all(many, ids);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) CHECK(report_text(a.reports[i]) == report_text(b.reports[i]));
}

TEST_CASE("golden comparison flags the corrupted report", "[reports]") {
  const auto dir = std::filesystem::temp_directory_path() / "dirprod-golden-unit";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> ids{"component-count", "lift-geodesic"};
  write_golden(verify_all({}, ids), dir);
  CHECK(verify_all({}, ids, dir).golden_mismatches.empty());
  {
    std::ofstream out(dir / "lift-geodesic.json", std::ios::app);
    out << " ";
  }
  const auto s = verify_all({}, ids, dir);
  CHECK(s.golden_mismatches == std::vector<std::string>{"lift-geodesic"});
  CHECK(s.exit_code() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("json output uses exact rationals", "[reports][io]") {
  const auto r = delta_exact(cycle_graph(5));
  const json j = to_json(r);
  CHECK(j["delta_num"] == 5);
  CHECK(j["delta_den"] == 4);
  CHECK(j["mode"] == "exact");
  CHECK(j["witness"]["corners"].size() == 3);
  CHECK(j["witness"]["sides"].size() == 3);

  const json p = to_json(Point::on_edge(cycle_graph(5), 1, 0, 4));
  CHECK(p["edge"] == json::array({0, 1}));
  CHECK(p["offset16"] == 12);
  CHECK(to_json(Point::vertex(3))["vertex"] == 3);

  const json inf = to_json(Dist16::infinity());
  CHECK(inf.is_null());
  CHECK(to_json(Rational(6, 4)) == json{{"num", 3}, {"den", 2}});

  const json q = to_json(qi_constants(cycle_graph(5), cycle_graph(5), {0, 1, 2, 3, 4}));
  CHECK(q["beta"] == json{{"num", 0}, {"den", 1}});
  CHECK(q["profile"][0][0].is_object());

  const json c = to_json(certify_cycle(cycle_graph(5), {0, 1, 2, 3, 4}));
  CHECK(c["length"] == 5);
  CHECK(c["minimal"] == true);
}
