#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relay {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or path: self-loops, parallel edges, negative weights,
/// non-adjacent path vertices and the like.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A leg whose pickup vertex cannot be reached by its agent.
class InfeasibleLeg : public Error {
 public:
  using Error::Error;
};

/// No schedule of the requested kind exists for the instance.
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// The selection grid needs more points than there are agents.
class NotEnoughAgents : public InfeasibleInstance {
 public:
  using InfeasibleInstance::InfeasibleInstance;
};

/// No assignment saturates every selection point.
class Unsaturable : public InfeasibleInstance {
 public:
  using InfeasibleInstance::InfeasibleInstance;
};

/// A grid offset falls strictly inside a path edge under strict landing.
class FractionalLanding : public Error {
 public:
  using Error::Error;
};

/// The subset DP was asked for more agents than it is configured to handle.
class OracleCapacity : public Error {
 public:
  using Error::Error;
};

/// A bound that must hold for any optimal schedule was violated.
class Contradiction : public Error {
 public:
  using Error::Error;
};

/// An agent ran out of energy while replaying a schedule.
class StrandedAgent : public Error {
 public:
  StrandedAgent(std::size_t agent, std::int64_t vertex, const std::string& what)
      : Error(what), agent_(agent), vertex_(vertex) {}

  std::size_t agent() const { return agent_; }
  std::int64_t vertex() const { return vertex_; }

 private:
  std::size_t agent_;
  std::int64_t vertex_;
};

/// Replay finished without certifying delivery (connectivity or coverage).
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// Text document could not be turned into an instance or result.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Generator precondition violated.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

/// A generator's self-check did not reproduce its target trajectory.
class ReconstructionFailure : public GeneratorError {
 public:
  using GeneratorError::GeneratorError;
};

}  // namespace relay
