#pragma once

// Greedy solvers: at each selection point fetch the closest unused agent.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "relay/grid.hpp"
#include "relay/model.hpp"

namespace relay {

/// Picks among agents tied at the minimum fetch distance. `tied` is sorted by
/// agent id and never empty.
using TieBreak = std::function<AgentId(std::span<const AgentId> tied)>;

inline AgentId lowest_index(std::span<const AgentId> tied) { return tied.front(); }

namespace detail {

/// Closest unused agent to path position `index`, or nullopt when none can
/// reach it.
inline std::optional<AgentId> closest_unused(const DeliveryInstance& instance,
                                             const DistanceTable& distances,
                                             const std::vector<bool>& used,
                                             std::size_t index,
                                             const TieBreak& tie_break) {
  const VertexId spoint = instance.path().vertex(index);
  std::optional<Energy> best;
  std::vector<AgentId> tied;
  for (AgentId a = 0; a < instance.agent_count(); ++a) {
    if (used[a]) continue;
    const auto d = distances.at(instance.start(a), spoint);
    if (!d) continue;
    if (!best || *d < *best) {
      best = d;
      tied.assign(1, a);
    } else if (*d == *best) {
      tied.push_back(a);
    }
  }
  if (tied.empty()) return std::nullopt;
  return tie_break(tied);
}

}  // namespace detail

/// Walks the path vertex by vertex, fetching a fresh agent for each edge. Once
/// every agent is in use the last one carries the rest of the path.
inline SolveResult greedy1(const DeliveryInstance& instance,
                           const TieBreak& tie_break = lowest_index) {
  const PathRef& path = instance.path();
  const DistanceTable distances = instance.agent_distances();
  std::vector<bool> used(instance.agent_count(), false);
  std::vector<Leg> legs;
  for (std::size_t i = 0; i < path.last(); ++i) {
    if (legs.size() == instance.agent_count()) {
      legs.back().drop = path.last();
      break;
    }
    const auto pick = detail::closest_unused(instance, distances, used, i, tie_break);
    if (!pick) {
      throw InfeasibleInstance("no unused agent can reach path position " +
                               std::to_string(i));
    }
    used[*pick] = true;
    legs.push_back({*pick, i, i + 1, 0});
  }
  return make_result(instance, distances, std::move(legs), "greedy1");
}

/// Greedy over the selection grid of spacing `beta`.
inline SolveResult greedy_beta(const DeliveryInstance& instance, Energy beta,
                               const TieBreak& tie_break = lowest_index,
                               Landing landing = Landing::kSnapDown) {
  const PathRef& path = instance.path();
  const SelectionGrid grid = selection_grid(path, beta, landing);
  if (grid.size() > instance.agent_count()) {
    throw NotEnoughAgents("grid of spacing " + std::to_string(beta) + " needs " +
                          std::to_string(grid.size()) + " agents, have " +
                          std::to_string(instance.agent_count()));
  }
  const DistanceTable distances = instance.agent_distances();
  std::vector<bool> used(instance.agent_count(), false);
  std::vector<Leg> legs;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const std::size_t at = grid.points[j].index;
    const auto pick = detail::closest_unused(instance, distances, used, at, tie_break);
    if (!pick) {
      throw InfeasibleInstance("no unused agent can reach grid point at position " +
                               std::to_string(at));
    }
    used[*pick] = true;
    legs.push_back({*pick, at, grid.drop_index(j, path), 0});
  }
  return make_result(instance, distances, std::move(legs), "greedy-beta",
                     "beta=" + std::to_string(beta));
}

}  // namespace relay
