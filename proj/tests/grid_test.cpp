#include "relay/grid.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace relay {
namespace {

using testing::iota_path;
using testing::unit_path;

TEST(SelectionGridTest, RemainderGoesFirst) {
  const WeightedGraph g = unit_path(7);
  const PathRef p(g, iota_path(7));
  const SelectionGrid grid = selection_grid(p, 2);
  std::vector<Energy> offsets;
  for (const GridPoint& pt : grid.points) offsets.push_back(pt.offset);
  EXPECT_EQ(offsets, (std::vector<Energy>{0, 1, 3, 5}));
  EXPECT_EQ(grid.segment_lengths, (std::vector<Energy>{1, 2, 2, 2}));
}

TEST(SelectionGridTest, ExactDivisionHasEqualSegments) {
  const WeightedGraph g = unit_path(12);
  const PathRef p(g, iota_path(12));
  const SelectionGrid grid = selection_grid(p, 4);
  EXPECT_EQ(grid.size(), 3u);
  EXPECT_EQ(grid.segment_lengths, (std::vector<Energy>{4, 4, 4}));
  EXPECT_EQ(selection_grid(p, 12).size(), 1u);
}

TEST(SelectionGridTest, RejectsOutOfRangeBeta) {
  const WeightedGraph g = unit_path(3);
  const PathRef p(g, iota_path(3));
  EXPECT_THROW(selection_grid(p, 0), std::invalid_argument);
  EXPECT_THROW(selection_grid(p, 4), std::invalid_argument);
}

TEST(SelectionGridTest, SnapsDownOrThrowsInsideAnEdge) {
  const WeightedGraph g(3, {{0, 1, 3}, {1, 2, 3}});
  const PathRef p(g, {0, 1, 2});
  // Ideal offsets 0, 2, 4 land on 0, 0, 3: the second collapses onto s.
  const SelectionGrid grid = selection_grid(p, 2);
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid.points[1].index, 1u);
  EXPECT_EQ(grid.segment_lengths, (std::vector<Energy>{3, 3}));
  EXPECT_THROW(selection_grid(p, 2, Landing::kStrict), FractionalLanding);
  EXPECT_NO_THROW(selection_grid(p, 3, Landing::kStrict));
}

TEST(SelectionGridTest, UnitPathProperties) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const auto len = static_cast<VertexId>(1 + rng() % 40);
    const WeightedGraph g = unit_path(len);
    const PathRef p(g, iota_path(len));
    const auto beta = static_cast<Energy>(1 + rng() % static_cast<std::uint64_t>(len));
    const SelectionGrid grid = selection_grid(p, beta, Landing::kStrict);
    ASSERT_EQ(static_cast<Energy>(grid.size()), (len + beta - 1) / beta);
    Energy sum = 0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      sum += grid.segment_lengths[j];
      if (j > 0) {
        ASSERT_EQ(grid.segment_lengths[j], beta);
      }
      ASSERT_GE(grid.segment_lengths[j], 1);
      ASSERT_LE(grid.segment_lengths[j], beta);
    }
    ASSERT_EQ(sum, len);
  }
}

}  // namespace
}  // namespace relay
