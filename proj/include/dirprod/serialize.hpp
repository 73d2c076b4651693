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

#include <string>
#include <vector>

#include "json.hpp"

#include "dirprod/hyperbolicity.hpp"
#include "dirprod/odd_cycles.hpp"
#include "dirprod/qi.hpp"
#include "dirprod/reports.hpp"

namespace dirprod {

inline json to_json(const Point& p) {
  if (p.is_vertex()) return json{{"vertex", p.vertex_id()}};
  return json{{"edge", {p.lower(), p.upper()}}, {"offset16", p.offset()}};
}

inline json to_json(const Triangle& t) {
  json corners = json::array();
  for (const auto& c : t.corners) corners.push_back(to_json(c));
  json sides = json::array();
  for (const auto& side : t.sides) {
    json s = json::array();
    for (const auto& p : side) s.push_back(to_json(p));
    sides.push_back(std::move(s));
  }
  return json{{"corners", std::move(corners)}, {"sides", std::move(sides)}};
}

inline json to_json(const DeltaResult& r) {
  json j;
  j["delta"] = to_json(r.delta);
  j["delta_num"] = r.delta.to_rational().num();
  j["delta_den"] = r.delta.to_rational().den();
  j["mode"] = std::string(to_string(r.mode));
  json w = to_json(r.witness);
  w["point"] = to_json(r.witness_point);
  w["side"] = 0;
  j["witness"] = std::move(w);
  return j;
}

inline json to_json(const CycleCertificate& c) {
  json j{{"vertices", c.vertices}, {"length", c.length}, {"odd", c.odd}, {"isometric", c.isometric},
         {"minimal", c.minimal()}};
  if (c.reduction) {
    j["reduction"] = {{"shortcut", c.reduction->shortcut},
                      {"arc", c.reduction->arc},
                      {"cycle", c.reduction->cycle}};
  } else {
    j["reduction"] = nullptr;
  }
  return j;
}

inline json to_json(const QiReport& q) {
  json profile = json::array();
  for (auto [a, b] : q.profile) profile.push_back({to_json(Rational(a, 16)), to_json(Rational(b, 16))});
  return json{{"alpha", to_json(q.alpha)},
              {"beta", to_json(q.beta)},
              {"zero_beta_alpha", to_json(q.zero_beta_alpha)},
              {"epsilon", to_json(q.epsilon)},
              {"embedding_ok", q.embedding_ok},
              {"profile", std::move(profile)}};
}

}  // namespace dirprod
