#pragma once

#include "relay/bottleneck.hpp"
#include "relay/diagnostics.hpp"
#include "relay/errors.hpp"
#include "relay/exact.hpp"
#include "relay/generators.hpp"
#include "relay/graph.hpp"
#include "relay/greedy.hpp"
#include "relay/grid.hpp"
#include "relay/io.hpp"
#include "relay/matching.hpp"
#include "relay/model.hpp"
#include "relay/relax.hpp"
#include "relay/simulate.hpp"
#include "relay/validate.hpp"
