#pragma once

// Replays a schedule as a synchronous movement suite: at every step each agent
// stays put or crosses one edge, paying its weight.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "relay/model.hpp"
#include "relay/validate.hpp"

namespace relay {

struct FeasibilitySuite {
  /// positions[i][a], energy[i][a]: agent a at step i. Step 0 is the start.
  std::vector<std::vector<VertexId>> positions;
  std::vector<std::vector<Energy>> energy;
  /// Agent holding the data after each step (nullopt before the first pickup).
  std::vector<std::optional<AgentId>> holder;

  std::size_t steps() const { return positions.empty() ? 0 : positions.size() - 1; }
  const std::vector<Energy>& final_energy() const { return energy.back(); }
};

namespace detail {

/// Per-agent plan: vertex to occupy at each step (index 0 = start).
inline std::vector<std::vector<VertexId>> plan_walks(const DeliveryInstance& instance,
                                                     const SolveResult& result) {
  const PathRef& path = instance.path();
  const std::size_t k = instance.agent_count();
  std::vector<std::vector<VertexId>> fetch(k);
  for (const Leg& leg : result.schedule.legs) {
    fetch[leg.agent] = dijkstra(instance.graph(), instance.start(leg.agent))
                           .path_to(path.vertex(leg.pickup));
  }

  // Leg j starts carrying once both its agent and the data are at the pickup.
  std::vector<std::vector<VertexId>> walks(k);
  std::size_t data_ready = 0;
  std::size_t horizon = 0;
  for (const Leg& leg : result.schedule.legs) {
    std::vector<VertexId>& walk = walks[leg.agent];
    walk = fetch[leg.agent];
    const std::size_t arrival = walk.size() - 1;
    const std::size_t begin = std::max(arrival, data_ready);
    walk.resize(begin + 1, walk.back());
    for (std::size_t p = leg.pickup + 1; p <= leg.drop; ++p) {
      walk.push_back(path.vertex(p));
    }
    data_ready = walk.size() - 1;
    horizon = std::max(horizon, data_ready);
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (walks[a].empty()) walks[a].push_back(instance.start(a));
    horizon = std::max(horizon, walks[a].size() - 1);
  }
  for (auto& walk : walks) walk.resize(horizon + 1, walk.back());
  return walks;
}

}  // namespace detail

/// Materializes and checks a feasibility suite for `result` with the given
/// per-agent budgets. Throws StrandedAgent when some agent cannot afford its
/// next edge, FeasibilityError when the visited vertices fail to connect s to
/// t or miss part of the path.
inline FeasibilitySuite simulate_feasibility(const DeliveryInstance& instance,
                                             const SolveResult& result,
                                             std::span<const Energy> budgets) {
  if (budgets.size() != instance.agent_count()) {
    throw std::invalid_argument("simulate_feasibility: one budget per agent");
  }
  {
    // Budgets are checked by the replay itself, not by the validator.
    const auto report = validate_schedule(instance.with_budgets(std::nullopt), result);
    if (!report.ok()) {
      throw std::invalid_argument("simulate_feasibility: schedule invalid (" +
                                  std::string(to_string(report.violations[0].kind)) +
                                  ")");
    }
  }

  const auto walks = detail::plan_walks(instance, result);
  const std::size_t k = instance.agent_count();
  const std::size_t horizon = walks[0].size() - 1;
  const PathRef& path = instance.path();
  const WeightedGraph& graph = instance.graph();

  // Data timeline: leg j holds the data from its pickup step to its drop step.
  std::vector<std::pair<std::size_t, std::size_t>> hold;  // [begin, end] steps
  {
    std::size_t ready = 0;
    for (const Leg& leg : result.schedule.legs) {
      const auto& walk = walks[leg.agent];
      std::size_t begin = ready;
      while (walk[begin] != path.vertex(leg.pickup)) ++begin;
      const std::size_t end = begin + (leg.drop - leg.pickup);
      hold.emplace_back(begin, end);
      ready = end;
    }
  }

  FeasibilitySuite suite;
  suite.positions.reserve(horizon + 1);
  std::vector<VertexId> position(k);
  std::vector<Energy> energy(budgets.begin(), budgets.end());
  for (std::size_t a = 0; a < k; ++a) position[a] = walks[a][0];
  suite.positions.push_back(position);
  suite.energy.push_back(energy);
  suite.holder.push_back(std::nullopt);

  for (std::size_t step = 1; step <= horizon; ++step) {
    for (std::size_t a = 0; a < k; ++a) {
      const VertexId from = position[a];
      const VertexId to = walks[a][step];
      if (from == to) continue;  // w(v,v) = 0
      const auto w = graph.weight(from, to);
      if (!w) {
        throw FeasibilityError("agent " + std::to_string(a) + " jumps from " +
                               std::to_string(from) + " to non-neighbor " +
                               std::to_string(to));
      }
      if (energy[a] < *w) {
        throw StrandedAgent(a, from,
                            "agent " + std::to_string(a) + " stranded at vertex " +
                                std::to_string(from) + " with " +
                                std::to_string(energy[a]) + " energy, next edge costs " +
                                std::to_string(*w));
      }
      energy[a] -= *w;
      position[a] = to;
    }
    std::optional<AgentId> holder;
    for (std::size_t j = 0; j < hold.size(); ++j) {
      if (hold[j].first <= step && step <= hold[j].second) {
        holder = result.schedule.legs[j].agent;
      }
    }
    suite.positions.push_back(position);
    suite.energy.push_back(energy);
    suite.holder.push_back(holder);
  }

  // s and t connected inside the subgraph induced by every visited vertex,
  // and that subgraph contains the whole path.
  std::vector<bool> visited(graph.vertex_count(), false);
  for (const auto& row : suite.positions) {
    for (VertexId v : row) visited[static_cast<std::size_t>(v)] = true;
  }
  for (VertexId v : path.vertices()) {
    if (!visited[static_cast<std::size_t>(v)]) {
      throw FeasibilityError("path vertex " + std::to_string(v) + " never visited");
    }
  }
  std::vector<bool> reached(graph.vertex_count(), false);
  std::deque<VertexId> queue{path.source()};
  reached[static_cast<std::size_t>(path.source())] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const Neighbor& n : graph.neighbors(u)) {
      const auto idx = static_cast<std::size_t>(n.vertex);
      if (visited[idx] && !reached[idx]) {
        reached[idx] = true;
        queue.push_back(n.vertex);
      }
    }
  }
  if (!reached[static_cast<std::size_t>(path.target())]) {
    throw FeasibilityError("source and target not connected by visited vertices");
  }
  return suite;
}

/// Uses the instance's own budgets.
inline FeasibilitySuite simulate_feasibility(const DeliveryInstance& instance,
                                             const SolveResult& result) {
  if (!instance.budgets()) {
    throw std::invalid_argument("simulate_feasibility: instance carries no budgets");
  }
  return simulate_feasibility(instance, result, *instance.budgets());
}

}  // namespace relay
