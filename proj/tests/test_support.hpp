#pragma once

#include <vector>

#include "relay/model.hpp"

namespace relay::testing {

/// Unit path 0..len, plus `extra` vertices and edges hanging off it.
inline WeightedGraph unit_path(VertexId len, std::vector<Edge> extra = {},
                               std::size_t extra_vertices = 0) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < len; ++i) edges.push_back({i, i + 1, 1});
  edges.insert(edges.end(), extra.begin(), extra.end());
  return WeightedGraph(static_cast<std::size_t>(len + 1) + extra_vertices, std::move(edges));
}

inline std::vector<VertexId> iota_path(VertexId len) {
  std::vector<VertexId> v;
  for (VertexId i = 0; i <= len; ++i) v.push_back(i);
  return v;
}

}  // namespace relay::testing
