#pragma once

#include <vector>

#include "relay/model.hpp"

namespace relay {

struct RelaxedInstance {
  DeliveryInstance instance;
  std::vector<VertexId> vertex_map;  // original vertex -> relaxed vertex
};

/// Lifts an instance onto the unit relaxation of its graph, so that hand-overs
/// may happen anywhere along an edge. The path keeps its total weight; a path
/// edge shortened by a contraction-induced parallel edge, or a path folded
/// onto itself by contraction, is rejected.
inline RelaxedInstance relax_instance(const DeliveryInstance& instance) {
  UnitRelaxation relaxed = unit_relaxation(instance.graph());
  const PathRef& path = instance.path();
  std::vector<VertexId> lifted{relaxed.vertex_map[static_cast<std::size_t>(path.source())]};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const VertexId a = relaxed.vertex_map[static_cast<std::size_t>(path.vertex(i))];
    const VertexId b = relaxed.vertex_map[static_cast<std::size_t>(path.vertex(i + 1))];
    const Energy w = path.distance(i, i + 1);
    if (w == 0) continue;  // endpoints merged
    const auto chain = relaxed.chain(a, b);
    if (chain.empty() || static_cast<Energy>(chain.size() - 1) != w) {
      throw GraphError("path edge " + std::to_string(i) +
                       " does not survive the unit relaxation intact");
    }
    lifted.insert(lifted.end(), chain.begin() + 1, chain.end());
  }
  if (lifted.size() < 2) {
    throw GraphError("path collapses to a single vertex under contraction");
  }
  std::vector<VertexId> agents;
  agents.reserve(instance.agent_count());
  for (VertexId q : instance.agents()) {
    agents.push_back(relaxed.vertex_map[static_cast<std::size_t>(q)]);
  }
  return {DeliveryInstance(std::move(relaxed.graph), std::move(lifted), std::move(agents),
                           instance.budgets()),
          std::move(relaxed.vertex_map)};
}

}  // namespace relay
