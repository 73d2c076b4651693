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

// Command-line front end: generators, products, distances, thin constants, odd cycles,
// quasi-isometry constructions and the verification reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dirprod.hpp"

namespace {

using dirprod::json;

struct Globals {
  std::string format = "json";
  std::uint64_t budget = dirprod::kDefaultTriangleBudget;
  std::uint64_t seed = 1;
  int jobs = 1;
};

void emit(const Globals& g, const json& j, const std::string& tsv) {
  if (g.format == "tsv") {
    std::cout << tsv;
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dirprod::Error(dirprod::ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

std::pair<int, int> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw dirprod::Error(dirprod::ErrorCode::ParseError, "expected u,v but got " + s);
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw dirprod::Error(dirprod::ErrorCode::ParseError, "expected u,v but got " + s);
  }
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw dirprod::Error(dirprod::ErrorCode::ParseError, "bad integer list " + s);
    }
  }
  return out;
}

dirprod::BallSpec parse_ball(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw dirprod::Error(dirprod::ErrorCode::ParseError, "expected center:radius");
  try {
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw dirprod::Error(dirprod::ErrorCode::ParseError, "expected center:radius but got " + s);
  }
}

dirprod::FamilySpec family_from(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed) {
  dirprod::FamilySpec spec;
  spec.kind = dirprod::parse_family_kind(kind);
  spec.seed = seed;
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw dirprod::Error(dirprod::ErrorCode::BadParameter,
                           kind + " takes " + std::to_string(k) + " parameter(s)");
  };
  auto as_int = [&](std::size_t i) {
    try {
      return std::stoi(params[i]);
    } catch (const std::exception&) {
      throw dirprod::Error(dirprod::ErrorCode::BadParameter, "bad parameter " + params[i]);
    }
  };
  switch (spec.kind) {
    case dirprod::FamilyKind::complete_bipartite:
    case dirprod::FamilyKind::cycle_with_pendant:
      need(2);
      spec.a = as_int(0);
      spec.b = as_int(1);
      break;
    case dirprod::FamilyKind::random_graph:
      need(2);
      spec.a = as_int(0);
      try {
        spec.p = std::stod(params[1]);
      } catch (const std::exception&) {
        throw dirprod::Error(dirprod::ErrorCode::BadParameter, "bad probability " + params[1]);
      }
      break;
    default:
      need(1);
      spec.a = as_int(0);
  }
  return spec;
}

json qi_with_bound(const dirprod::QiReport& q, dirprod::Rational alpha, dirprod::Rational beta,
                   std::optional<dirprod::Rational> eps) {
  json j = dirprod::to_json(q);
  j["bound"] = {{"alpha", dirprod::to_json(alpha)},
                {"beta", dirprod::to_json(beta)},
                {"epsilon", dirprod::to_json(eps)},
                {"measured_beta", dirprod::to_json(q.beta_at(alpha))}};
  const bool ok = q.within(alpha, beta) && (!eps || q.full_within(*eps));
  j["within_bound"] = ok;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolicity of direct products of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--budget", g.budget, "Triangle evaluation budget for thin-constant searches");
  app.add_option("--seed", g.seed, "Seed for random generators and samples");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = hardware concurrency)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  std::string gen_kind;
  std::vector<std::string> gen_params;
  std::string gen_out;
  gen->add_option("kind", gen_kind,
                  "path | cycle | complete | complete-bipartite | tree | dumbbell | cycle-with-pendant | random")
      ->required();
  gen->add_option("params", gen_params, "Family parameters");
  gen->add_option("-o,--output", gen_out, "Output edge list (default stdout)");

  // product
  auto* prod = app.add_subcommand("product", "Direct product of two graphs");
  std::string prod_a, prod_b, prod_out, prod_index;
  prod->add_option("first", prod_a)->required();
  prod->add_option("second", prod_b)->required();
  prod->add_option("-o,--output", prod_out, "Output edge list (default stdout)");
  prod->add_option("--index", prod_index, "Write the vertex index (n1, n2) as JSON");

  // distance
  auto* dist = app.add_subcommand("distance", "Product distance from factor parity distances");
  std::string dist_f1, dist_f2, dist_from, dist_to;
  dist->add_option("--factor1", dist_f1)->required();
  dist->add_option("--factor2", dist_f2)->required();
  dist->add_option("--from", dist_from, "u,v")->required();
  dist->add_option("--to", dist_to, "u2,v2")->required();

  // delta
  auto* delta = app.add_subcommand("delta", "Exact thin-triangle constant");
  std::string delta_graph;
  bool delta_vertex = false;
  bool delta_no_prune = false;
  delta->add_option("graph", delta_graph)->required();
  delta->add_flag("--vertex-variant", delta_vertex, "Restrict corners to vertices");
  delta->add_flag("--no-prune", delta_no_prune, "Disable bound pruning");

  // odd-cycles
  auto* odd = app.add_subcommand("odd-cycles", "Minimal odd cycles and distances to them");
  std::string odd_graph;
  std::optional<int> odd_lmax;
  bool odd_distances = false;
  odd->add_option("graph", odd_graph)->required();
  odd->add_option("--lmax", odd_lmax, "Largest cycle length to enumerate");
  odd->add_flag("--distances", odd_distances, "Also print the distance of every vertex to the cycles");

  // qi
  auto* qi = app.add_subcommand("qi", "Quasi-isometry constructions");
  std::string qi_kind, qi_g1, qi_g2, qi_walk, qi_out;
  std::vector<std::string> qi_balls;
  std::optional<int> qi_m;
  qi->add_option("--construction", qi_kind)
      ->required()
      ->check(CLI::IsMember({"g2odd", "no-odd", "l-p2", "gamma1", "collapse", "product-star"}));
  qi->add_option("--g1", qi_g1, "First graph")->required();
  qi->add_option("--g2", qi_g2, "Second graph");
  qi->add_option("--walk", qi_walk, "Comma-separated walk in the first graph (gamma1)");
  qi->add_option("--ball", qi_balls, "Ball center:radius (collapse, product-star)");
  qi->add_option("--m", qi_m, "Regularity bound for product-star");
  qi->add_option("-o,--output", qi_out, "Write the constructed graph (collapse, product-star)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run every check; exit 0 pass, 1 fail, 2 indeterminate");
  std::vector<std::string> verify_only;
  std::string verify_golden, verify_write;
  verify->add_option("--only", verify_only, "Restrict to these check ids");
  verify->add_option("--golden", verify_golden, "Compare each report with DIR/<id>.json");
  verify->add_option("--write-golden", verify_write, "Write each report to DIR/<id>.json");

  // report
  auto* report = app.add_subcommand("report", "Run one check and print its report");
  std::string report_id;
  std::string report_m, report_n;
  report->add_option("id", report_id, "Check id")->required();
  report->add_option("--m", report_m, "Comma-separated first parameter grid (m, n or L)");
  report->add_option("--n", report_n, "Comma-separated second parameter grid");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto graph = dirprod::generate(family_from(gen_kind, gen_params, g.seed));
      write_text(gen_out, dirprod::to_edge_list(graph));
      return 0;
    }

    if (*prod) {
      const auto p = dirprod::direct_product(dirprod::read_edge_list_file(prod_a), dirprod::read_edge_list_file(prod_b));
      write_text(prod_out, dirprod::to_edge_list(p.graph));
      if (!prod_index.empty()) write_text(prod_index, json{{"n1", p.index.n1}, {"n2", p.index.n2}}.dump(2) + "\n");
      return 0;
    }

    if (*dist) {
      const auto g1 = dirprod::read_edge_list_file(dist_f1);
      const auto g2 = dirprod::read_edge_list_file(dist_f2);
      const auto [u, v] = parse_pair(dist_from);
      const auto [u2, v2] = parse_pair(dist_to);
      if (u < 0 || u >= g1.order() || u2 < 0 || u2 >= g1.order() || v < 0 || v >= g2.order() || v2 < 0 ||
          v2 >= g2.order())
        throw dirprod::Error(dirprod::ErrorCode::BadId, "vertex out of range");
      const auto e1 = dirprod::parity_distances(g1, u)[u2];
      const auto e2 = dirprod::parity_distances(g2, v)[v2];
      const auto d = dirprod::product_distance(e1, e2);
      const auto parity = dirprod::realizing_parity(e1, e2);
      const json j{{"distance", dirprod::to_json(d)},
                   {"parity", parity ? json(*parity == 0 ? "even" : "odd") : json(nullptr)}};
      emit(g, j, d.str() + '\t' + (parity ? (*parity == 0 ? "even" : "odd") : "none") + '\n');
      return 0;
    }

    if (*delta) {
      const auto graph = dirprod::read_edge_list_file(delta_graph);
      dirprod::DeltaOptions opt;
      opt.triangle_budget = g.budget;
      opt.prune = !delta_no_prune;
      opt.jobs = g.jobs;
      const auto r = delta_vertex ? dirprod::delta_vertex(graph, opt) : dirprod::delta_exact(graph, opt);
      emit(g, dirprod::to_json(r), r.delta.str() + '\t' + std::string(dirprod::to_string(r.mode)) + '\n');
      return 0;
    }

    if (*odd) {
      const auto graph = dirprod::read_edge_list_file(odd_graph);
      const auto cycles = dirprod::minimal_cycles(graph, odd_lmax);
      json j;
      const auto girth = dirprod::odd_girth(graph);
      j["odd_girth"] = girth ? json(*girth) : json(nullptr);
      j["lmax"] = odd_lmax ? *odd_lmax : dirprod::default_cycle_bound(graph);
      json list = json::array();
      std::ostringstream tsv;
      for (const auto& c : cycles) {
        list.push_back(dirprod::to_json(c));
        tsv << "cycle\t" << c.length;
        for (auto v : c.vertices) tsv << '\t' << v;
        tsv << '\n';
      }
      j["minimal_cycles"] = std::move(list);
      if (odd_distances) {
        json d = json::array();
        const auto field = dirprod::dist_to_minimal_cycles(graph, odd_lmax);
        for (std::size_t v = 0; v < field.size(); ++v) {
          d.push_back(dirprod::to_json(field[v]));
          tsv << "distance\t" << v << '\t' << field[v].str() << '\n';
        }
        j["distances"] = std::move(d);
      }
      emit(g, j, tsv.str());
      return 0;
    }

    if (*qi) {
      const auto g1 = dirprod::read_edge_list_file(qi_g1);
      auto second = [&]() {
        if (qi_g2.empty()) throw dirprod::Error(dirprod::ErrorCode::BadParameter, "--g2 is required");
        return dirprod::read_edge_list_file(qi_g2);
      };
      std::vector<dirprod::BallSpec> balls;
      for (const auto& b : qi_balls) balls.push_back(parse_ball(b));
      json j;
      if (qi_kind == "g2odd") {
        const auto g2 = second();
        const auto c = dirprod::odd_factor_embedding(g1, g2);
        const dirprod::Rational girth(*dirprod::odd_girth(g2));
        const dirprod::Rational diam(dirprod::diam_vertices(g2).value() / 16);
        j = qi_with_bound(dirprod::qi_constants(c.domain, c.codomain, c.map), dirprod::Rational(1), girth, diam + girth);
      } else if (qi_kind == "no-odd") {
        const auto g2 = second();
        const auto c = dirprod::bipartite_embedding(g1, g2);
        const dirprod::Rational diam(dirprod::diam_vertices(g2).value() / 16);
        j = qi_with_bound(dirprod::qi_constants(c.domain, c.codomain, c.map, c.target), dirprod::Rational(1),
                          dirprod::Rational(0), diam);
      } else if (qi_kind == "l-p2") {
        const auto g2 = second();
        const auto c = dirprod::edge_inclusion(g1, g2);
        const dirprod::Rational diam(dirprod::diam_vertices(g2).value() / 16);
        j = qi_with_bound(dirprod::qi_constants(c.domain, c.codomain, c.map), dirprod::Rational(1),
                          dirprod::Rational(0), diam);
      } else if (qi_kind == "gamma1") {
        dirprod::VertexPath walk;
        for (int v : parse_list(qi_walk)) walk.push_back(v);
        const auto lift1 = dirprod::lift_gamma(g1, walk, 1);
        const auto lift2 = dirprod::lift_gamma(g1, walk, 2);
        const auto p = dirprod::direct_product(g1, dirprod::path_graph(2));
        auto pairs = [&](const std::vector<dirprod::VertexId>& l) {
          json a = json::array();
          for (auto x : l) a.push_back({p.index.first(x), p.index.second(x) == 0 ? "v1" : "v2"});
          return a;
        };
        j["gamma1"] = pairs(lift1);
        j["gamma2"] = pairs(lift2);
        j["input_geodesic"] = dirprod::is_geodesic(g1, walk);
        j["lift_geodesic"] = dirprod::is_geodesic(p.graph, lift1);
      } else if (qi_kind == "collapse") {
        const auto cr = dirprod::collapse_balls(g1, balls);
        const dirprod::Rational k(cr.max_radius);
        j = qi_with_bound(dirprod::qi_constants(g1, cr.graph, cr.map), k, dirprod::Rational(2) * k, dirprod::Rational(0));
        j["stars"] = cr.stars;
        if (!qi_out.empty()) write_text(qi_out, dirprod::to_edge_list(cr.graph));
      } else {
        const auto ps = dirprod::product_star(g1, balls, qi_m);
        const int bound = 4 * ps.max_radius + ps.m;
        const auto domain = dirprod::direct_product(g1, dirprod::path_graph(2)).graph;
        j = qi_with_bound(dirprod::qi_constants(domain, ps.graph, ps.map), dirprod::Rational(bound + 1),
                          dirprod::Rational(bound), dirprod::Rational(0));
        j["M"] = ps.m;
        j["stars"] = ps.stars;
        if (!qi_out.empty()) write_text(qi_out, dirprod::to_edge_list(ps.graph));
      }
      emit(g, j, j.dump() + '\n');
      return 0;
    }

    dirprod::ReportOptions ropt;
    ropt.budget = g.budget;
    ropt.jobs = g.jobs;
    ropt.seed = g.seed;

    if (*verify) {
      std::optional<std::filesystem::path> golden;
      if (!verify_golden.empty()) golden = verify_golden;
      const auto summary = dirprod::verify_all(ropt, verify_only, golden);
      if (!verify_write.empty()) dirprod::write_golden(summary, verify_write);
      std::ostringstream tsv;
      for (const auto& r : summary.reports) tsv << r.to_tsv();
      for (const auto& id : summary.golden_mismatches) tsv << id << "\tgolden mismatch\n";
      if (g.format == "json") {
        std::cout << summary.to_json().dump(2) << '\n';
      } else {
        std::cout << tsv.str();
      }
      for (const auto& r : summary.reports)
        std::cerr << r.id << ": " << dirprod::to_string(r.outcome()) << '\n';
      for (const auto& id : summary.golden_mismatches) std::cerr << id << ": golden mismatch\n";
      return summary.exit_code();
    }

    if (*report) {
      dirprod::CheckReport r;
      const auto ms = parse_list(report_m);
      const auto ns = parse_list(report_n);
      if (report_id == "cycle-path-product" && !ms.empty()) {
        r = dirprod::report_cmxpn(ms, ns.empty() ? dirprod::range_inclusive(2, 12) : ns, ropt);
      } else if (report_id == "path-path-product" && !ms.empty()) {
        r = dirprod::report_pmxpn(ms, ns.empty() ? ms : ns, ropt);
      } else if (report_id == "unbounded-growth" && !ms.empty()) {
        r = dirprod::report_unbounded_growth(ms, ropt);
      } else if (report_id == "p2-growth" && !ms.empty()) {
        r = dirprod::report_p2_growth(ms, ropt);
      } else {
        const auto summary = dirprod::verify_all(ropt, {report_id});
        if (summary.reports.empty())
          throw dirprod::Error(dirprod::ErrorCode::BadParameter, "unknown check id " + report_id);
        r = summary.reports.front();
      }
      emit(g, r.to_json(), r.to_tsv());
      return r.outcome() == dirprod::Outcome::pass ? 0 : (r.outcome() == dirprod::Outcome::fail ? 1 : 2);
    }
  } catch (const dirprod::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
