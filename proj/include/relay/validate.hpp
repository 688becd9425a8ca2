#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "relay/model.hpp"

namespace relay {

enum class ViolationKind {
  kEmptySchedule,
  kUnknownAgent,
  kPositionOutOfRange,
  kStartNotSource,
  kEndNotTarget,
  kCoverageGap,
  kEmptyLeg,
  kRepeatedAgent,
  kUnreachablePickup,
  kFetchMismatch,
  kCostMismatch,
  kRangeMismatch,
  kOverBudget,
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptySchedule: return "empty schedule";
    case ViolationKind::kUnknownAgent: return "unknown agent";
    case ViolationKind::kPositionOutOfRange: return "position out of range";
    case ViolationKind::kStartNotSource: return "start not at source";
    case ViolationKind::kEndNotTarget: return "end not at target";
    case ViolationKind::kCoverageGap: return "coverage gap";
    case ViolationKind::kEmptyLeg: return "empty leg";
    case ViolationKind::kRepeatedAgent: return "repeated agent";
    case ViolationKind::kUnreachablePickup: return "unreachable pickup";
    case ViolationKind::kFetchMismatch: return "fetch mismatch";
    case ViolationKind::kCostMismatch: return "cost mismatch";
    case ViolationKind::kRangeMismatch: return "range mismatch";
    case ViolationKind::kOverBudget: return "over budget";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  bool has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
  }
};

/// Checks a result against the single-hand-over path-cover rules and
/// recomputes every cost. Never throws on a bad schedule; each broken rule is
/// one report entry.
inline ValidationReport validate_schedule(const DeliveryInstance& instance,
                                          const SolveResult& result) {
  ValidationReport report;
  auto flag = [&](ViolationKind kind, std::string detail) {
    report.violations.push_back({kind, std::move(detail)});
  };

  const auto& legs = result.schedule.legs;
  const PathRef& path = instance.path();
  if (legs.empty()) {
    flag(ViolationKind::kEmptySchedule, "schedule has no legs");
    return report;
  }

  std::vector<VertexId> starts;
  for (const Leg& leg : legs) {
    if (leg.agent < instance.agent_count()) starts.push_back(instance.start(leg.agent));
  }
  const DistanceTable distances = shortest_distances(instance.graph(), starts);

  if (legs.front().pickup != 0) {
    flag(ViolationKind::kStartNotSource,
         "first pickup at position " + std::to_string(legs.front().pickup));
  }
  if (legs.back().drop != path.last()) {
    flag(ViolationKind::kEndNotTarget,
         "last drop at position " + std::to_string(legs.back().drop));
  }

  std::set<AgentId> seen;
  std::map<AgentId, Energy> recomputed;
  Energy max_cost = 0;
  for (std::size_t j = 0; j < legs.size(); ++j) {
    const Leg& leg = legs[j];
    const std::string at = "leg " + std::to_string(j) + ": ";
    if (j + 1 < legs.size() && legs[j + 1].pickup != leg.drop) {
      flag(ViolationKind::kCoverageGap,
           at + "drop " + std::to_string(leg.drop) + " but next pickup " +
               std::to_string(legs[j + 1].pickup));
    }
    if (leg.agent >= instance.agent_count()) {
      flag(ViolationKind::kUnknownAgent, at + "agent " + std::to_string(leg.agent));
      continue;
    }
    if (!seen.insert(leg.agent).second) {
      flag(ViolationKind::kRepeatedAgent,
           at + "agent " + std::to_string(leg.agent) + " already used");
    }
    if (leg.pickup > path.last() || leg.drop > path.last()) {
      flag(ViolationKind::kPositionOutOfRange,
           at + "pickup " + std::to_string(leg.pickup) + ", drop " +
               std::to_string(leg.drop));
      continue;
    }
    if (leg.pickup >= leg.drop) {
      flag(ViolationKind::kEmptyLeg,
           at + "pickup " + std::to_string(leg.pickup) + " not before drop " +
               std::to_string(leg.drop));
    }
    const auto fetch = distances.at(instance.start(leg.agent), path.vertex(leg.pickup));
    if (!fetch) {
      flag(ViolationKind::kUnreachablePickup,
           at + "agent " + std::to_string(leg.agent) + " cannot reach pickup");
      continue;
    }
    if (*fetch != leg.fetch_distance) {
      flag(ViolationKind::kFetchMismatch,
           at + "stated " + std::to_string(leg.fetch_distance) + ", shortest " +
               std::to_string(*fetch));
    }
    const Energy cost = *fetch + path.distance(leg.pickup, leg.drop);
    recomputed[leg.agent] = cost;
    max_cost = std::max(max_cost, cost);
  }

  for (const auto& [agent, cost] : recomputed) {
    auto it = result.per_agent_cost.find(agent);
    if (it == result.per_agent_cost.end() || it->second != cost) {
      flag(ViolationKind::kCostMismatch,
           "agent " + std::to_string(agent) + " costs " + std::to_string(cost));
    }
  }
  for (const auto& [agent, cost] : result.per_agent_cost) {
    if (!recomputed.count(agent) && agent < instance.agent_count()) {
      flag(ViolationKind::kCostMismatch,
           "agent " + std::to_string(agent) + " has a cost but no leg");
    }
  }
  if (result.range != max_cost) {
    flag(ViolationKind::kRangeMismatch,
         "stated range " + std::to_string(result.range) + ", recomputed " +
             std::to_string(max_cost));
  }
  if (const auto& budgets = instance.budgets()) {
    for (const auto& [agent, cost] : recomputed) {
      if (cost > (*budgets)[agent]) {
        flag(ViolationKind::kOverBudget,
             "agent " + std::to_string(agent) + " needs " + std::to_string(cost) +
                 ", budget " + std::to_string((*budgets)[agent]));
      }
    }
  }
  return report;
}

}  // namespace relay
