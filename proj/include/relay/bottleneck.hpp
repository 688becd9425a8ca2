#pragma once

// Bottleneck bipartite assignment between agents and selection points.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "relay/errors.hpp"
#include "relay/graph.hpp"

namespace relay {

/// costs[agent][point]; nullopt marks a missing edge.
using CostTable = std::vector<std::vector<std::optional<Energy>>>;

struct MatchingResult {
  std::vector<std::size_t> assignment;  // point -> agent
  Energy bottleneck = 0;
  std::size_t matchings_computed = 0;
};

namespace detail {

/// Maximum-cardinality matching (Kuhn's augmenting paths) over the edges with
/// cost <= cap. Returns point -> agent, -1 for unmatched points.
class CappedMatcher {
 public:
  CappedMatcher(const CostTable& costs, std::size_t points)
      : costs_(costs), points_(points) {}

  std::vector<std::ptrdiff_t> run(Energy cap, std::size_t& matched) {
    cap_ = cap;
    agent_of_.assign(points_, -1);
    point_of_.assign(costs_.size(), -1);
    matched = 0;
    for (std::size_t p = 0; p < points_; ++p) {
      visited_.assign(costs_.size(), false);
      if (augment(p)) ++matched;
    }
    return agent_of_;
  }

 private:
  bool usable(std::size_t agent, std::size_t point) const {
    const auto& c = costs_[agent][point];
    return c && *c <= cap_;
  }

  bool augment(std::size_t point) {
    for (std::size_t a = 0; a < costs_.size(); ++a) {
      if (visited_[a] || !usable(a, point)) continue;
      visited_[a] = true;
      if (point_of_[a] < 0 || augment(static_cast<std::size_t>(point_of_[a]))) {
        point_of_[a] = static_cast<std::ptrdiff_t>(point);
        agent_of_[point] = static_cast<std::ptrdiff_t>(a);
        return true;
      }
    }
    return false;
  }

  const CostTable& costs_;
  std::size_t points_;
  Energy cap_ = 0;
  std::vector<std::ptrdiff_t> agent_of_;
  std::vector<std::ptrdiff_t> point_of_;
  std::vector<bool> visited_;
};

}  // namespace detail

/// Saturating assignment of minimum maximum cost. Computes a maximum matching,
/// and while it saturates every point deletes all edges of the current
/// maximum weight and tries again; the last saturating matching wins.
inline MatchingResult bottleneck_matching(const CostTable& costs) {
  const std::size_t agents = costs.size();
  const std::size_t points = agents == 0 ? 0 : costs[0].size();
  for (const auto& row : costs) {
    if (row.size() != points) throw std::invalid_argument("ragged cost table");
  }
  if (points > agents) {
    throw Unsaturable(std::to_string(points) + " points but only " +
                      std::to_string(agents) + " agents");
  }
  MatchingResult result;
  if (points == 0) return result;

  std::vector<Energy> weights;
  for (const auto& row : costs) {
    for (const auto& c : row) {
      if (c) weights.push_back(*c);
    }
  }
  std::sort(weights.begin(), weights.end(), std::greater<>());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

  detail::CappedMatcher matcher(costs, points);
  std::optional<std::vector<std::ptrdiff_t>> best;
  // weights[level] is the heaviest edge still present.
  for (std::size_t level = 0; level < weights.size(); ++level) {
    std::size_t matched = 0;
    auto assignment = matcher.run(weights[level], matched);
    ++result.matchings_computed;
    if (matched < points) break;
    best = std::move(assignment);
  }
  if (!best) throw Unsaturable("no assignment covers every selection point");

  result.assignment.reserve(points);
  for (std::size_t p = 0; p < points; ++p) {
    const auto a = static_cast<std::size_t>((*best)[p]);
    result.assignment.push_back(a);
    result.bottleneck = std::max(result.bottleneck, *costs[a][p]);
  }
  return result;
}

}  // namespace relay
