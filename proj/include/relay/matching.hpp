#pragma once

// Matching-based solvers: assign agents to grid points by bottleneck matching,
// then sweep every feasible grid spacing.

#include <optional>
#include <string>
#include <vector>

#include "relay/bottleneck.hpp"
#include "relay/grid.hpp"
#include "relay/model.hpp"

namespace relay {

/// Agent-by-point fetch distance table for a grid.
inline CostTable fetch_costs(const DeliveryInstance& instance,
                             const DistanceTable& distances,
                             const SelectionGrid& grid) {
  CostTable costs(instance.agent_count());
  for (AgentId a = 0; a < instance.agent_count(); ++a) {
    costs[a].reserve(grid.size());
    for (const GridPoint& p : grid.points) {
      costs[a].push_back(
          distances.at(instance.start(a), instance.path().vertex(p.index)));
    }
  }
  return costs;
}

inline SolveResult matching_beta(const DeliveryInstance& instance,
                                 const DistanceTable& distances, Energy beta,
                                 Landing landing = Landing::kSnapDown) {
  const PathRef& path = instance.path();
  const SelectionGrid grid = selection_grid(path, beta, landing);
  if (grid.size() > instance.agent_count()) {
    throw NotEnoughAgents("grid of spacing " + std::to_string(beta) + " needs " +
                          std::to_string(grid.size()) + " agents");
  }
  const MatchingResult match = bottleneck_matching(fetch_costs(instance, distances, grid));
  std::vector<Leg> legs;
  legs.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    legs.push_back({match.assignment[j], grid.points[j].index, grid.drop_index(j, path), 0});
  }
  return make_result(instance, distances, std::move(legs), "matching-beta",
                     "beta=" + std::to_string(beta));
}

/// Throws NotEnoughAgents or Unsaturable when `beta` admits no assignment.
inline SolveResult matching_beta(const DeliveryInstance& instance, Energy beta,
                                 Landing landing = Landing::kSnapDown) {
  return matching_beta(instance, instance.agent_distances(), beta, landing);
}

/// Best Matching_beta over every integer beta in [max(1, ceil(W/k)), W]; ties
/// go to the larger beta.
inline SolveResult matching_sweep(const DeliveryInstance& instance,
                                  Landing landing = Landing::kSnapDown) {
  const PathRef& path = instance.path();
  const DistanceTable distances = instance.agent_distances();
  const Energy total = path.total_weight();
  const auto k = static_cast<Energy>(instance.agent_count());

  if (total == 0) {
    // Degenerate zero-weight path: one point, cheapest agent carries it all.
    CostTable costs(instance.agent_count());
    for (AgentId a = 0; a < instance.agent_count(); ++a) {
      costs[a].push_back(distances.at(instance.start(a), path.source()));
    }
    MatchingResult match;
    try {
      match = bottleneck_matching(costs);
    } catch (const Unsaturable&) {
      throw InfeasibleInstance("no agent can reach the source");
    }
    auto result = make_result(instance, distances,
                              {{match.assignment[0], 0, path.last(), 0}}, "matching",
                              "beta=0");
    return result;
  }

  std::optional<SolveResult> best;
  for (Energy beta = std::max<Energy>(1, (total + k - 1) / k); beta <= total; ++beta) {
    try {
      SolveResult candidate = matching_beta(instance, distances, beta, landing);
      if (!best || candidate.range <= best->range) best = std::move(candidate);
    } catch (const InfeasibleInstance&) {
      continue;
    } catch (const FractionalLanding&) {
      continue;
    }
  }
  if (!best) throw InfeasibleInstance("no grid spacing admits a saturating matching");
  best->solver_name = "matching";
  return *best;
}

}  // namespace relay
