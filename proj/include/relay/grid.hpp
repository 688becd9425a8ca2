#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relay/errors.hpp"
#include "relay/graph.hpp"

namespace relay {

/// What to do when a grid offset falls strictly inside a path edge.
enum class Landing {
  kSnapDown,  // use the last path vertex at or before the offset
  kStrict,    // throw FractionalLanding
};

struct GridPoint {
  std::size_t index = 0;  // path position
  Energy offset = 0;
};

/// Selection points spaced `beta` apart along the path, the first gap being
/// W mod beta when that is nonzero.
struct SelectionGrid {
  Energy beta = 0;
  std::vector<GridPoint> points;
  std::vector<Energy> segment_lengths;  // point j to point j+1, last point to t

  std::size_t size() const { return points.size(); }

  /// Path position where the carrier of point j hands over.
  std::size_t drop_index(std::size_t j, const PathRef& path) const {
    return j + 1 < points.size() ? points[j + 1].index : path.last();
  }
};

inline SelectionGrid selection_grid(const PathRef& path, Energy beta,
                                    Landing landing = Landing::kSnapDown) {
  const Energy total = path.total_weight();
  if (beta < 1 || beta > total) {
    throw std::invalid_argument("selection_grid: beta " + std::to_string(beta) +
                                " outside [1, " + std::to_string(total) + "]");
  }
  std::vector<Energy> ideal{0};
  const Energy first = total % beta == 0 ? beta : total % beta;
  for (Energy x = first; x < total; x += beta) ideal.push_back(x);

  SelectionGrid grid;
  grid.beta = beta;
  grid.points.push_back({0, 0});
  for (std::size_t j = 1; j < ideal.size(); ++j) {
    const std::size_t index = *path.last_at_or_before(ideal[j]);
    if (path.offset(index) != ideal[j] && landing == Landing::kStrict) {
      throw FractionalLanding("grid offset " + std::to_string(ideal[j]) +
                              " falls inside a path edge");
    }
    // Snapping can collapse neighbouring points onto one vertex.
    if (index <= grid.points.back().index) continue;
    grid.points.push_back({index, path.offset(index)});
  }
  for (std::size_t j = 0; j < grid.points.size(); ++j) {
    grid.segment_lengths.push_back(path.offset(grid.drop_index(j, path)) -
                                   grid.points[j].offset);
  }
  return grid;
}

}  // namespace relay
