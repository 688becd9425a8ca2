#include "relay/exact.hpp"

#include <cstdlib>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "relay/diagnostics.hpp"
#include "relay/generators.hpp"
#include "relay/validate.hpp"
#include "test_support.hpp"

namespace relay {
namespace {

using testing::iota_path;
using testing::unit_path;

// Unit path of weight 4, q1 at s, q2 one edge off the midpoint.
DeliveryInstance OffMidpoint() {
  return DeliveryInstance(unit_path(4, {{2, 5, 1}}, 1), iota_path(4), {0, 5});
}

TEST(ExactDecisionTest, SingleAgentBoundary) {
  const DeliveryInstance inst(unit_path(7), iota_path(7), {0});
  EXPECT_TRUE(exact_decision(inst, 7));
  EXPECT_FALSE(exact_decision(inst, 6));
}

TEST(ExactDecisionTest, OffMidpointInstance) {
  EXPECT_TRUE(exact_decision(OffMidpoint(), 3));
  EXPECT_FALSE(exact_decision(OffMidpoint(), 2));
}

TEST(ExactDecisionTest, CapacityLimit) {
  const DeliveryInstance inst(unit_path(2), iota_path(2), std::vector<VertexId>(21, 0));
  EXPECT_THROW(exact_decision(inst, 2), OracleCapacity);
  EXPECT_TRUE(exact_decision(inst, 2, OracleLimits{22, 4'000'000}));
}

TEST(ExactDecisionTest, CapacityFromEnvironment) {
  ::setenv("RELAY_ORACLE_MAX_K", "3", 1);
  EXPECT_EQ(OracleLimits::from_env().max_agents, 3u);
  ::setenv("RELAY_ORACLE_MAX_K", "junk", 1);
  EXPECT_EQ(OracleLimits::from_env().max_agents, 20u);
  ::unsetenv("RELAY_ORACLE_MAX_K");
  EXPECT_EQ(OracleLimits::from_env().max_agents, 20u);
}

TEST(ExactDecisionTest, MonotoneInRange) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto inst = gen_random(RandomSpec{4 + seed % 6, seed % 4, 1 + seed % 4, 6, seed, 0});
    bool seen = false;
    for (Energy r = 0; r <= 3 * inst.path().total_weight() + 20; ++r) {
      const bool ok = exact_decision(inst, r);
      if (seen) {
        ASSERT_TRUE(ok) << "seed " << seed << " range " << r;
      }
      seen = seen || ok;
    }
  }
}

TEST(ExactOptTest, SingleAgentAtSource) {
  const DeliveryInstance inst(unit_path(5), iota_path(5), {0});
  const ExactResult r = exact_opt(inst);
  EXPECT_EQ(r.bounds.opt_range, 5);
  EXPECT_EQ(r.bounds.d_star, 0);
  EXPECT_EQ(r.bounds.b_star, 5);
}

TEST(ExactOptTest, OffMidpointBounds) {
  const ExactResult r = exact_opt(OffMidpoint());
  EXPECT_EQ(r.bounds.opt_range, 3);
  EXPECT_EQ(r.bounds.d_star, 1);
  EXPECT_EQ(r.bounds.b_star, 2);
  EXPECT_TRUE(validate_schedule(OffMidpoint(), r.result).ok());
}

TEST(ExactOptTest, IntegerBisectionAgreesWithCandidateSearch) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = gen_random(RandomSpec{4 + seed % 8, seed % 5, 1 + seed % 5, 8, seed, 0});
    const Energy a = exact_opt(inst).bounds.opt_range;
    const Energy b = exact_opt(inst, OracleLimits{20, 0}).bounds.opt_range;
    ASSERT_EQ(a, b) << "seed " << seed;
  }
}

TEST(ExactOptTest, UnreachableDataIsInfeasible) {
  const DeliveryInstance inst(unit_path(2, {}, 1), iota_path(2), {3});
  EXPECT_THROW(exact_opt(inst), InfeasibleInstance);
}

TEST(ExactOptTest, MatchesExhaustiveEnumeration) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto inst = gen_random(RandomSpec{3 + seed % 7, seed % 4, 1 + seed % 4, 8, seed, 6});
    const auto expected = oracle::brute_force_optimum(inst);
    ASSERT_TRUE(expected.has_value());
    const ExactResult r = exact_opt(inst);
    ASSERT_EQ(r.bounds.opt_range, *expected) << "seed " << seed;
    ASSERT_TRUE(validate_schedule(inst, r.result).ok());
  }
}

TEST(ProofDiagnosticsTest, SingleAgentGridIsTheSource) {
  const DeliveryInstance inst(unit_path(4, {{0, 5, 2}}, 1), iota_path(4), {5});
  const ProofDiagnostics d = proof_diagnostics(inst, exact_opt(inst));
  EXPECT_EQ(d.d_b, 2);
  EXPECT_EQ(d.bounds.opt_range, 6);
}

TEST(ProofDiagnosticsTest, InequalityChainOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto inst = gen_random(RandomSpec{3 + seed % 9, seed % 5, 1 + seed % 5, 1, seed, 0});
    const ExactResult opt = exact_opt(inst);
    const ProofDiagnostics d = proof_diagnostics(inst, opt);
    ASSERT_GE(opt.bounds.opt_range, d.bounds.d_star);
    ASSERT_GE(opt.bounds.opt_range, d.bounds.b_star);
    ASSERT_GE(d.bounds.d_star + d.bounds.b_star, d.d_b) << "seed " << seed;
    ASSERT_LE(d.matching_at_b_star, d.d_b + d.bounds.b_star);
  }
}

}  // namespace
}  // namespace relay
