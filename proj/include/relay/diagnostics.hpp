#pragma once

#include "relay/exact.hpp"
#include "relay/matching.hpp"

namespace relay {

struct ProofDiagnostics {
  DiagnosticBounds bounds;
  Energy d_b = 0;                // bottleneck of the matching on the b*-grid
  Energy matching_at_b_star = 0; // range of Matching_beta with beta = b*
};

/// Bottleneck of the grid at beta = b* for the given optimum. The grid must be
/// saturable: every part of it holds a distinct optimal selection point.
inline ProofDiagnostics proof_diagnostics(const DeliveryInstance& instance,
                                          const ExactResult& optimal,
                                          Landing landing = Landing::kSnapDown) {
  ProofDiagnostics out;
  out.bounds = optimal.bounds;
  const Energy beta = optimal.bounds.b_star;
  if (beta < 1) {
    throw std::invalid_argument("proof_diagnostics: zero-length optimal segments");
  }
  const DistanceTable distances = instance.agent_distances();
  const SelectionGrid grid = selection_grid(instance.path(), beta, landing);
  try {
    if (grid.size() > instance.agent_count()) {
      throw NotEnoughAgents("grid at b* larger than the agent set");
    }
    out.d_b = bottleneck_matching(fetch_costs(instance, distances, grid)).bottleneck;
    out.matching_at_b_star = matching_beta(instance, distances, beta, landing).range;
  } catch (const InfeasibleInstance& e) {
    throw Contradiction(std::string("grid at b* = ") + std::to_string(beta) +
                        " cannot be matched although an optimum exists: " + e.what());
  }
  return out;
}

}  // namespace relay
