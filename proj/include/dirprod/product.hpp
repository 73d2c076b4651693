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
#include <utility>
#include <vector>

#include "dirprod/error.hpp"
#include "dirprod/graph.hpp"

namespace dirprod {

/// Bijection between factor pairs (i, j) and product vertex ids i * n2 + j.
struct ProductIndex {
  int n1 = 0;
  int n2 = 0;

  VertexId id(VertexId i, VertexId j) const {
    if (i < 0 || j < 0 || i >= n1 || j >= n2)
      throw Error(ErrorCode::BadId, "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return i * n2 + j;
  }
  std::pair<VertexId, VertexId> coords(VertexId id) const { return {id / n2, id % n2}; }
  VertexId first(VertexId id) const { return id / n2; }   ///< first projection
  VertexId second(VertexId id) const { return id % n2; }  ///< second projection
  int order() const { return n1 * n2; }
};

struct Product {
  Graph graph;
  ProductIndex index;
};

/// Direct (tensor) product: (a,c) ~ (b,d) iff a ~ b in the first factor and c ~ d in the second.
inline Product direct_product(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty()) throw Error(ErrorCode::EmptyGraph, "product factors must be non-empty");
  ProductIndex idx{g1.order(), g2.order()};
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(2 * static_cast<std::size_t>(g1.size()) * static_cast<std::size_t>(g2.size()));
  for (const Edge& e1 : g1.edges()) {
    for (const Edge& e2 : g2.edges()) {
      edges.emplace_back(idx.id(e1.u, e2.u), idx.id(e1.v, e2.v));
      edges.emplace_back(idx.id(e1.u, e2.v), idx.id(e1.v, e2.u));
    }
  }
  return {build_graph(edges, idx.order()), idx};
}

/// Component count of a product of connected non-trivial factors: 2^(max(k,1)-1) for k
/// bipartite factors.
inline std::int64_t predict_component_count(const std::vector<bool>& bipartite_flags) {
  int k = 0;
  for (bool b : bipartite_flags) k += b ? 1 : 0;
  return std::int64_t{1} << (std::max(k, 1) - 1);
}

}  // namespace dirprod
