#pragma once

// Exact optimum by subset dynamic programming over agent sets.
//
// reach[mask] is the furthest path position the data can get to using exactly
// the agents in mask, each fetched once and handing over at path vertices.
// An unused agent a extends reach r by picking up at some position v <= r it
// can afford (d(q_a, v) <= R) and carrying as far as R - d(q_a, v) allows.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "relay/model.hpp"

namespace relay {

struct OracleLimits {
  std::size_t max_agents = 20;
  /// Above this many candidate values exact_opt bisects the integer range
  /// instead of materializing the candidate set. Both are exact.
  std::size_t max_candidates = 4'000'000;

  /// Defaults, with max_agents overridden by RELAY_ORACLE_MAX_K when set.
  static OracleLimits from_env() {
    OracleLimits limits;
    if (const char* raw = std::getenv("RELAY_ORACLE_MAX_K")) {
      char* end = nullptr;
      const unsigned long value = std::strtoul(raw, &end, 10);
      if (end != raw && *end == '\0' && value > 0 && value <= 30) {
        limits.max_agents = value;
      }
    }
    return limits;
  }
};

struct DiagnosticBounds {
  Energy d_star = 0;     // largest fetch distance of the optimal schedule
  Energy b_star = 0;     // largest carried segment of the optimal schedule
  Energy opt_range = 0;  // R*
};

struct ExactResult {
  SolveResult result;
  DiagnosticBounds bounds;
};

namespace detail {

class SubsetOracle {
 public:
  SubsetOracle(const DeliveryInstance& instance, const DistanceTable& distances,
               const OracleLimits& limits)
      : instance_(instance), distances_(distances) {
    if (instance.agent_count() > limits.max_agents) {
      throw OracleCapacity("exact oracle supports at most " +
                           std::to_string(limits.max_agents) + " agents, got " +
                           std::to_string(instance.agent_count()));
    }
    const PathRef& path = instance.path();
    fetch_.assign(instance.agent_count(), {});
    for (AgentId a = 0; a < instance.agent_count(); ++a) {
      for (VertexId v : path.vertices()) {
        fetch_[a].push_back(distances.at(instance.start(a), v));
      }
    }
  }

  /// Runs the DP at `range`. On success returns the legs of one schedule whose
  /// every leg costs at most `range`.
  std::optional<std::vector<Leg>> solve(Energy range) {
    const PathRef& path = instance_.path();
    const std::size_t k = instance_.agent_count();
    const std::size_t positions = path.size();
    const auto last = static_cast<std::int32_t>(path.last());

    // step[a][r]: reach after agent a picks up at the best position <= r.
    step_.assign(k, std::vector<std::int32_t>(positions, -1));
    pickup_.assign(k, std::vector<std::int32_t>(positions, -1));
    for (std::size_t a = 0; a < k; ++a) {
      std::optional<Energy> best;  // max offset(v) - d(q_a, v)
      std::int32_t best_v = -1;
      for (std::size_t r = 0; r < positions; ++r) {
        const auto& d = fetch_[a][r];
        if (d && *d <= range) {
          const Energy slack = path.offset(r) - *d;
          if (!best || slack > *best) {
            best = slack;
            best_v = static_cast<std::int32_t>(r);
          }
        }
        if (best) {
          const auto far = path.last_at_or_before(*best + range);
          step_[a][r] = static_cast<std::int32_t>(*far);
          pickup_[a][r] = best_v;
        }
      }
    }

    const std::size_t masks = std::size_t{1} << k;
    reach_.assign(masks, -1);
    via_.assign(masks, -1);
    reach_[0] = 0;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      const std::int32_t r = reach_[mask];
      if (r < 0) continue;
      if (r == last) return rebuild(mask);
      for (std::size_t a = 0; a < k; ++a) {
        if (mask & (std::size_t{1} << a)) continue;
        const std::int32_t next = step_[a][static_cast<std::size_t>(r)];
        if (next <= r) continue;
        const std::size_t to = mask | (std::size_t{1} << a);
        if (next > reach_[to]) {
          reach_[to] = next;
          via_[to] = static_cast<std::int8_t>(a);
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<Leg> rebuild(std::size_t mask) const {
    std::vector<Leg> legs;
    while (mask != 0) {
      const auto a = static_cast<std::size_t>(via_[mask]);
      const std::size_t prev = mask & ~(std::size_t{1} << a);
      const auto r = static_cast<std::size_t>(reach_[prev]);
      legs.push_back({a, static_cast<std::size_t>(pickup_[a][r]), 0, 0});
      mask = prev;
    }
    std::reverse(legs.begin(), legs.end());
    // Drop legs made redundant by a later pickup at or before their own.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = 0; j + 1 < legs.size(); ++j) {
        if (legs[j + 1].pickup <= legs[j].pickup) {
          legs.erase(legs.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
      }
    }
    for (std::size_t j = 0; j < legs.size(); ++j) {
      legs[j].drop = j + 1 < legs.size() ? legs[j + 1].pickup : instance_.path().last();
    }
    return legs;
  }

  const DeliveryInstance& instance_;
  const DistanceTable& distances_;
  std::vector<std::vector<Distance>> fetch_;
  std::vector<std::vector<std::int32_t>> step_;
  std::vector<std::vector<std::int32_t>> pickup_;
  std::vector<std::int32_t> reach_;
  std::vector<std::int8_t> via_;
};

}  // namespace detail

/// True iff some valid schedule has every leg cost <= range.
inline bool exact_decision(const DeliveryInstance& instance, Energy range,
                           const OracleLimits& limits = {}) {
  const DistanceTable distances = instance.agent_distances();
  detail::SubsetOracle oracle(instance, distances, limits);
  return oracle.solve(range).has_value();
}

/// Minimum range over all single-hand-over schedules with vertex hand-overs,
/// with one optimal schedule and its d*, b*.
inline ExactResult exact_opt(const DeliveryInstance& instance,
                             const OracleLimits& limits = {}) {
  const DistanceTable distances = instance.agent_distances();
  detail::SubsetOracle oracle(instance, distances, limits);
  const PathRef& path = instance.path();
  const std::size_t positions = path.size();

  // Every leg cost is d(q_a, v) + d_P(v, u) for some agent and v before u.
  std::vector<Energy> candidates;
  Energy lo = path.total_weight() / static_cast<Energy>(instance.agent_count());
  Energy hi = 0;
  const std::size_t count =
      instance.agent_count() * positions * (positions - 1) / 2;
  const bool enumerate = count <= limits.max_candidates;
  if (enumerate) candidates.reserve(count);
  for (AgentId a = 0; a < instance.agent_count(); ++a) {
    for (std::size_t v = 0; v < positions; ++v) {
      const auto d = distances.at(instance.start(a), path.vertex(v));
      if (!d) continue;
      hi = std::max(hi, *d + path.distance(v, path.last()));
      if (!enumerate) continue;
      for (std::size_t u = v + 1; u < positions; ++u) {
        candidates.push_back(*d + path.distance(v, u));
      }
    }
  }

  std::optional<std::vector<Leg>> legs;
  Energy best = 0;
  if (enumerate) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::size_t left = 0;
    std::size_t right = candidates.size();  // answer index in [left, right)
    if (right == 0 || !oracle.solve(candidates.back())) {
      throw InfeasibleInstance("no schedule delivers the data at any range");
    }
    right = candidates.size() - 1;
    while (left < right) {
      const std::size_t mid = left + (right - left) / 2;
      if (oracle.solve(candidates[mid])) {
        right = mid;
      } else {
        left = mid + 1;
      }
    }
    best = candidates[left];
  } else {
    if (!oracle.solve(hi)) {
      throw InfeasibleInstance("no schedule delivers the data at any range");
    }
    while (lo < hi) {
      const Energy mid = lo + (hi - lo) / 2;
      if (oracle.solve(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    best = hi;
  }
  legs = oracle.solve(best);

  ExactResult out;
  out.result = make_result(instance, distances, std::move(*legs), "exact");
  out.bounds.opt_range = out.result.range;
  for (const Leg& leg : out.result.schedule.legs) {
    out.bounds.d_star = std::max(out.bounds.d_star, leg.fetch_distance);
    out.bounds.b_star = std::max(out.bounds.b_star, path.distance(leg.pickup, leg.drop));
  }
  return out;
}

}  // namespace relay
