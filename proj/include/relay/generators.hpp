#pragma once

// Instance generators: the two adversarial families for the greedy solvers
// and a seeded random family.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relay/errors.hpp"
#include "relay/exact.hpp"
#include "relay/greedy.hpp"
#include "relay/model.hpp"

namespace relay {

/// Unit path v_0..v_W with agent i (1-based) parked on v_{i-1} and a weight-1
/// chord from v_{i-1} to v_{(i-1)W/k}. Greedy1 takes agent i at v_{i-1} and
/// leaves agent k to carry the last W-k+1 edges; spreading the agents over
/// the chords costs at most W/k + 1.
inline DeliveryInstance gen_prop1(Energy total, std::size_t k) {
  const auto kk = static_cast<Energy>(k);
  if (k < 2) throw GeneratorError("prop1 needs k >= 2");
  if (total % kk != 0) throw GeneratorError("prop1 needs k to divide W");
  if (total < kk * kk) throw GeneratorError("prop1 needs W >= k^2");

  const Energy spread = total / kk;
  std::vector<Edge> edges;
  std::vector<VertexId> path;
  for (Energy i = 0; i <= total; ++i) path.push_back(static_cast<VertexId>(i));
  for (Energy i = 0; i < total; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), 1});
  }
  std::vector<VertexId> agents;
  for (Energy i = 1; i <= kk; ++i) {
    const auto bait = static_cast<VertexId>(i - 1);
    const auto home = static_cast<VertexId>((i - 1) * spread);
    agents.push_back(bait);
    if (home - bait > 1) edges.push_back({bait, home, 1});
  }
  return DeliveryInstance(WeightedGraph(static_cast<std::size_t>(total + 1), std::move(edges)),
                          std::move(path), std::move(agents));
}

/// Expected values for a prop2 instance, checked by gen_prop2 itself.
struct Prop2Targets {
  Energy scaled_weight = 0;   // W * epsilon_scale
  Energy beta = 0;            // scaled W/k
  Energy greedy_range = 0;    // greedy_beta(beta) must return exactly this
  Energy optimal_bound = 0;   // exact optimum must be at most this
};

inline Prop2Targets prop2_targets(std::size_t k, Energy total, Energy epsilon_scale) {
  const auto kk = static_cast<Energy>(k);
  const Energy halves = (kk + 1) / 2;
  Prop2Targets t;
  t.scaled_weight = total * epsilon_scale;
  t.beta = t.scaled_weight / kk;
  t.greedy_range = t.scaled_weight;
  t.optimal_bound = (t.scaled_weight + halves - 1) / halves;
  return t;
}

/// Path of scaled weight T = W * epsilon_scale, grid spacing L = T/k. With
/// c = ceil(k/2): a spine of c agents parked at s and at floor(i*T/c),
/// i = 1..c-1, delivers at range ceil(T/c). Decoys (one more at s with a lower
/// index, one next to each spine agent but the first) keep the greedy busy so
/// that the spine agent at s is only fetched for the last grid point, at
/// range T. The instance validates itself and throws ReconstructionFailure
/// when either value is missed.
inline DeliveryInstance gen_prop2(std::size_t k, Energy total, Energy epsilon_scale) {
  const auto kk = static_cast<Energy>(k);
  if (k < 3 || k % 2 == 0) throw GeneratorError("prop2 needs odd k >= 3");
  if (total % kk != 0) throw GeneratorError("prop2 needs k to divide W");
  if (epsilon_scale < kk) throw GeneratorError("prop2 needs epsilon_scale >= k");

  const Prop2Targets targets = prop2_targets(k, total, epsilon_scale);
  const Energy scaled = targets.scaled_weight;
  const Energy spacing = targets.beta;
  const Energy halves = (kk + 1) / 2;

  std::set<Energy> offsets;
  for (Energy j = 0; j <= kk; ++j) offsets.insert(j * spacing);
  std::vector<Energy> spine;
  for (Energy i = 1; i < halves; ++i) {
    spine.push_back(i * scaled / halves);
    offsets.insert(spine.back());
  }
  std::vector<Energy> sorted(offsets.begin(), offsets.end());
  auto vertex_at = [&](Energy offset) {
    return static_cast<VertexId>(std::lower_bound(sorted.begin(), sorted.end(), offset) -
                                 sorted.begin());
  };

  std::vector<Edge> edges;
  std::vector<VertexId> path;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    path.push_back(static_cast<VertexId>(i));
    if (i > 0) {
      edges.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(i),
                       sorted[i] - sorted[i - 1]});
    }
  }
  std::vector<VertexId> agents{vertex_at(0)};  // decoy at s
  for (std::size_t i = 0; i < spine.size(); ++i) {
    agents.push_back(vertex_at(spine[i]));
    if (i > 0) agents.push_back(vertex_at(spine[i]));  // decoy
  }
  agents.push_back(vertex_at(0));  // spine agent at s, highest index

  DeliveryInstance instance(WeightedGraph(sorted.size(), std::move(edges)), std::move(path),
                            std::move(agents));
  if (instance.agent_count() != k) {
    throw ReconstructionFailure("prop2 placed " + std::to_string(instance.agent_count()) +
                                " agents, expected " + std::to_string(k));
  }
  const Energy greedy = greedy_beta(instance, spacing).range;
  if (greedy != targets.greedy_range) {
    throw ReconstructionFailure("prop2 greedy range " + std::to_string(greedy) +
                                ", expected " + std::to_string(targets.greedy_range));
  }
  if (!exact_decision(instance, targets.optimal_bound)) {
    throw ReconstructionFailure("prop2 optimum exceeds " +
                                std::to_string(targets.optimal_bound));
  }
  return instance;
}

struct RandomSpec {
  std::size_t n = 8;
  std::size_t extra_edges = 4;
  std::size_t k = 3;
  Energy max_weight = 8;
  std::uint64_t seed = 1;
  std::size_t max_path_vertices = 0;  // 0: up to n
};

/// Random spanning tree plus extra edges, weights uniform in 1..max_weight,
/// a random self-avoiding walk as the delivery path, agents anywhere.
inline DeliveryInstance gen_random(const RandomSpec& spec) {
  if (spec.n < 3) throw GeneratorError("random needs n >= 3");
  if (spec.k < 1) throw GeneratorError("random needs k >= 1");
  if (spec.max_weight < 1) throw GeneratorError("random needs max_weight >= 1");
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto weight = [&]() {
    return std::uniform_int_distribution<Energy>(1, spec.max_weight)(rng);
  };

  const std::size_t n = spec.n;
  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<VertexId>(i);
  std::shuffle(order.begin(), order.end(), rng);

  std::set<std::pair<VertexId, VertexId>> present;
  std::vector<Edge> edges;
  auto add = [&](VertexId u, VertexId v) {
    if (u == v) return false;
    const auto key = std::minmax(u, v);
    if (!present.insert({key.first, key.second}).second) return false;
    edges.push_back({key.first, key.second, weight()});
    return true;
  };
  for (std::size_t i = 1; i < n; ++i) add(order[i], order[uniform(0, i - 1)]);
  const std::size_t max_edges = n * (n - 1) / 2;
  for (std::size_t added = 0, tries = 0;
       added < spec.extra_edges && edges.size() < max_edges && tries < 50 * (spec.extra_edges + 1);
       ++tries) {
    if (add(static_cast<VertexId>(uniform(0, n - 1)), static_cast<VertexId>(uniform(0, n - 1)))) {
      ++added;
    }
  }
  WeightedGraph graph(n, edges);

  const std::size_t cap = spec.max_path_vertices == 0 ? n : std::min(spec.max_path_vertices, n);
  const std::size_t want = uniform(2, std::max<std::size_t>(cap, 2));
  std::vector<VertexId> path{static_cast<VertexId>(uniform(0, n - 1))};
  std::vector<bool> on_path(n, false);
  on_path[static_cast<std::size_t>(path[0])] = true;
  while (path.size() < want) {
    std::vector<VertexId> options;
    for (const Neighbor& nb : graph.neighbors(path.back())) {
      if (!on_path[static_cast<std::size_t>(nb.vertex)]) options.push_back(nb.vertex);
    }
    if (options.empty()) break;
    std::sort(options.begin(), options.end());
    const VertexId next = options[uniform(0, options.size() - 1)];
    on_path[static_cast<std::size_t>(next)] = true;
    path.push_back(next);
  }

  std::vector<VertexId> agents;
  for (std::size_t a = 0; a < spec.k; ++a) {
    agents.push_back(static_cast<VertexId>(uniform(0, n - 1)));
  }
  return DeliveryInstance(std::move(graph), std::move(path), std::move(agents));
}

inline DeliveryInstance gen_random(std::size_t n, std::size_t extra_edges, std::size_t k,
                                   Energy max_weight, std::uint64_t seed) {
  return gen_random(RandomSpec{n, extra_edges, k, max_weight, seed, 0});
}

enum class Family { kProp1, kProp2, kRandom };

/// Everything needed to rebuild a generated instance.
struct GenSpec {
  Family family = Family::kRandom;
  Energy total_weight = 0;  // W (prop1, prop2)
  std::size_t k = 3;
  std::uint64_t seed = 1;   // random
  Energy epsilon_scale = 1000;  // prop2
  std::size_t n = 8;            // random
  std::size_t extra_edges = 4;  // random
  Energy max_weight = 8;        // random
};

inline DeliveryInstance generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kProp1:
      return gen_prop1(spec.total_weight, spec.k);
    case Family::kProp2:
      return gen_prop2(spec.k, spec.total_weight, spec.epsilon_scale);
    case Family::kRandom:
      return gen_random(RandomSpec{spec.n, spec.extra_edges, spec.k, spec.max_weight,
                                   spec.seed, 0});
  }
  throw GeneratorError("unknown family");
}

}  // namespace relay
