#pragma once

// Delivery instances, schedules and cost accounting.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relay/errors.hpp"
#include "relay/graph.hpp"

namespace relay {

using AgentId = std::size_t;

/// Graph, fixed delivery path and agent start vertices. `budgets`, when
/// present, holds one energy budget per agent (all equal for the identical
/// range problem).
class DeliveryInstance {
 public:
  DeliveryInstance() = default;

  DeliveryInstance(WeightedGraph graph, std::vector<VertexId> path,
                   std::vector<VertexId> agents,
                   std::optional<std::vector<Energy>> budgets = std::nullopt)
      : graph_(std::move(graph)),
        path_(graph_, std::move(path)),
        agents_(std::move(agents)),
        budgets_(std::move(budgets)) {
    if (agents_.empty()) throw GraphError("instance needs at least one agent");
    for (std::size_t a = 0; a < agents_.size(); ++a) {
      if (!graph_.contains(agents_[a])) {
        throw GraphError("agent " + std::to_string(a) + " starts outside the graph");
      }
    }
    if (budgets_) {
      if (budgets_->size() != agents_.size()) {
        throw GraphError("budget count does not match agent count");
      }
      for (Energy b : *budgets_) {
        if (b < 0) throw GraphError("negative budget");
      }
    }
  }

  const WeightedGraph& graph() const { return graph_; }
  const PathRef& path() const { return path_; }
  const std::vector<VertexId>& agents() const { return agents_; }
  std::size_t agent_count() const { return agents_.size(); }
  VertexId start(AgentId a) const { return agents_.at(a); }
  const std::optional<std::vector<Energy>>& budgets() const { return budgets_; }

  DeliveryInstance with_budgets(std::optional<std::vector<Energy>> budgets) const {
    return DeliveryInstance(graph_, path_.vertices(), agents_, std::move(budgets));
  }

  DeliveryInstance with_uniform_budget(Energy budget) const {
    return with_budgets(std::vector<Energy>(agents_.size(), budget));
  }

  /// Distances from every agent start vertex.
  DistanceTable agent_distances() const {
    return shortest_distances(graph_, agents_);
  }

  friend bool operator==(const DeliveryInstance& a, const DeliveryInstance& b) {
    return a.graph_ == b.graph_ && a.path_ == b.path_ && a.agents_ == b.agents_ &&
           a.budgets_ == b.budgets_;
  }

 private:
  WeightedGraph graph_;
  PathRef path_;
  std::vector<VertexId> agents_;
  std::optional<std::vector<Energy>> budgets_;
};

/// One agent's contribution: walk to path position `pickup`, then carry the
/// data along the path to position `drop`.
struct Leg {
  AgentId agent = 0;
  std::size_t pickup = 0;
  std::size_t drop = 0;
  Energy fetch_distance = 0;

  friend bool operator==(const Leg&, const Leg&) = default;
};

struct Schedule {
  std::vector<Leg> legs;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct SolveResult {
  Schedule schedule;
  Energy range = 0;
  std::map<AgentId, Energy> per_agent_cost;
  std::string solver_name;
  std::string parameters;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

/// Fetch distance plus carried path length.
inline Energy leg_cost(const DeliveryInstance& instance,
                       const DistanceTable& distances, const Leg& leg) {
  const auto fetch = distances.at(instance.start(leg.agent),
                                  instance.path().vertex(leg.pickup));
  if (!fetch) {
    throw InfeasibleLeg("agent " + std::to_string(leg.agent) +
                        " cannot reach path position " +
                        std::to_string(leg.pickup));
  }
  return *fetch + instance.path().distance(leg.pickup, leg.drop);
}

inline Energy leg_cost(const DeliveryInstance& instance, const Leg& leg) {
  const VertexId start = instance.start(leg.agent);
  return leg_cost(instance, shortest_distances(instance.graph(), {&start, 1}), leg);
}

/// Builds a result from (agent, pickup, drop) triples, filling in fetch
/// distances, per-agent costs and the range.
inline SolveResult make_result(const DeliveryInstance& instance,
                               const DistanceTable& distances,
                               std::vector<Leg> legs, std::string solver_name,
                               std::string parameters = {}) {
  SolveResult result;
  result.solver_name = std::move(solver_name);
  result.parameters = std::move(parameters);
  for (Leg& leg : legs) {
    const auto fetch = distances.at(instance.start(leg.agent),
                                    instance.path().vertex(leg.pickup));
    if (!fetch) {
      throw InfeasibleLeg("agent " + std::to_string(leg.agent) +
                          " cannot reach path position " +
                          std::to_string(leg.pickup));
    }
    leg.fetch_distance = *fetch;
    const Energy cost = *fetch + instance.path().distance(leg.pickup, leg.drop);
    result.per_agent_cost[leg.agent] = cost;
    result.range = std::max(result.range, cost);
  }
  result.schedule.legs = std::move(legs);
  return result;
}

}  // namespace relay
