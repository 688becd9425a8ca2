#pragma once

// Weighted undirected graphs, shortest distances, fixed delivery paths and the
// unit-weight relaxation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relay/errors.hpp"

namespace relay {

using VertexId = std::int32_t;
using Energy = std::int64_t;
using Distance = std::optional<Energy>;  // nullopt: unreachable

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Energy weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId vertex;
  Energy weight;
};

/// Simple undirected graph with non-negative integer weights. Vertices are
/// 0..vertex_count()-1. Immutable once constructed.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                std::vector<std::string> labels = {})
      : vertex_count_(vertex_count),
        edges_(std::move(edges)),
        labels_(std::move(labels)),
        adjacency_(vertex_count) {
    if (!labels_.empty() && labels_.size() != vertex_count_) {
      throw GraphError("label count " + std::to_string(labels_.size()) +
                       " does not match vertex count " +
                       std::to_string(vertex_count_));
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      const std::string where = "edge " + std::to_string(i) + ": ";
      if (!contains(e.u) || !contains(e.v)) {
        throw GraphError(where + "endpoint out of range");
      }
      if (e.u == e.v) throw GraphError(where + "self-loop");
      if (e.weight < 0) throw GraphError(where + "negative weight");
      if (weight(e.u, e.v)) throw GraphError(where + "parallel edge");
      adjacency_[e.u].push_back({e.v, e.weight});
      adjacency_[e.v].push_back({e.u, e.weight});
    }
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < vertex_count_;
  }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }

  /// Weight of edge uv, or nullopt when u and v are not adjacent.
  std::optional<Energy> weight(VertexId u, VertexId v) const {
    for (const Neighbor& n : adjacency_.at(static_cast<std::size_t>(u))) {
      if (n.vertex == v) return n.weight;
    }
    return std::nullopt;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Single-source shortest path tree.
struct ShortestPathTree {
  VertexId source = 0;
  std::vector<Distance> dist;
  std::vector<VertexId> parent;  // -1 at the source and at unreachable vertices

  /// Vertices from the source to `target`, both included. Empty when
  /// unreachable.
  std::vector<VertexId> path_to(VertexId target) const {
    std::vector<VertexId> walk;
    if (!dist.at(static_cast<std::size_t>(target))) return walk;
    for (VertexId v = target; v != -1; v = parent[static_cast<std::size_t>(v)]) {
      walk.push_back(v);
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
  }
};

inline ShortestPathTree dijkstra(const WeightedGraph& graph, VertexId source) {
  if (!graph.contains(source)) {
    throw std::out_of_range("dijkstra: source " + std::to_string(source) +
                            " not in graph");
  }
  ShortestPathTree tree;
  tree.source = source;
  tree.dist.assign(graph.vertex_count(), std::nullopt);
  tree.parent.assign(graph.vertex_count(), -1);

  using Item = std::pair<Energy, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  tree.dist[static_cast<std::size_t>(source)] = 0;
  frontier.push({0, source});
  while (!frontier.empty()) {
    const auto [d, u] = frontier.top();
    frontier.pop();
    if (d != *tree.dist[static_cast<std::size_t>(u)]) continue;
    for (const Neighbor& n : graph.neighbors(u)) {
      auto& slot = tree.dist[static_cast<std::size_t>(n.vertex)];
      const Energy candidate = d + n.weight;
      // Ties keep the first parent found, so trees are deterministic.
      if (!slot || candidate < *slot) {
        slot = candidate;
        tree.parent[static_cast<std::size_t>(n.vertex)] = u;
        frontier.push({candidate, n.vertex});
      }
    }
  }
  return tree;
}

/// Shortest distances from a set of sources. Lookups are symmetric: (u, v) is
/// answered from u's row when u is a source, otherwise from v's row.
class DistanceTable {
 public:
  DistanceTable() = default;

  DistanceTable(const WeightedGraph& graph, std::span<const VertexId> sources) {
    for (VertexId s : sources) {
      if (rows_.count(s)) continue;
      rows_.emplace(s, dijkstra(graph, s).dist);
    }
  }

  bool has_source(VertexId v) const { return rows_.count(v) != 0; }
  bool empty() const { return rows_.empty(); }

  Distance at(VertexId u, VertexId v) const {
    if (auto it = rows_.find(u); it != rows_.end()) {
      return it->second.at(static_cast<std::size_t>(v));
    }
    if (auto it = rows_.find(v); it != rows_.end()) {
      return it->second.at(static_cast<std::size_t>(u));
    }
    throw std::out_of_range("DistanceTable: neither " + std::to_string(u) +
                            " nor " + std::to_string(v) + " is a source");
  }

  const std::vector<Distance>& row(VertexId source) const {
    return rows_.at(source);
  }

 private:
  std::map<VertexId, std::vector<Distance>> rows_;
};

inline DistanceTable shortest_distances(const WeightedGraph& graph,
                                        std::span<const VertexId> sources) {
  return DistanceTable(graph, sources);
}

/// The fixed s-t delivery path: a simple path of at least two vertices with
/// cumulative weights from s.
class PathRef {
 public:
  PathRef() = default;

  PathRef(const WeightedGraph& graph, std::vector<VertexId> vertices)
      : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) {
      throw GraphError("path needs at least two vertices");
    }
    std::vector<bool> seen(graph.vertex_count(), false);
    offsets_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const VertexId v = vertices_[i];
      if (!graph.contains(v)) {
        throw GraphError("path vertex " + std::to_string(i) + " out of range");
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw GraphError("path repeats vertex " + std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = true;
      if (i == 0) {
        offsets_.push_back(0);
        continue;
      }
      const auto w = graph.weight(vertices_[i - 1], v);
      if (!w) {
        throw GraphError("path vertices " + std::to_string(vertices_[i - 1]) +
                         " and " + std::to_string(v) + " are not adjacent");
      }
      offsets_.push_back(offsets_.back() + *w);
    }
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Energy>& offsets() const { return offsets_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t last() const { return vertices_.size() - 1; }
  VertexId source() const { return vertices_.front(); }
  VertexId target() const { return vertices_.back(); }
  VertexId vertex(std::size_t index) const { return vertices_.at(index); }
  Energy total_weight() const { return offsets_.empty() ? 0 : offsets_.back(); }

  Energy offset(std::size_t index) const {
    if (index >= offsets_.size()) {
      throw std::out_of_range("path index " + std::to_string(index) +
                              " out of range");
    }
    return offsets_[index];
  }

  /// Path metric between two positions.
  Energy distance(std::size_t i, std::size_t j) const {
    const Energy a = offset(i);
    const Energy b = offset(j);
    return a > b ? a - b : b - a;
  }

  /// Largest index whose offset is <= `offset`; nullopt when offset < 0.
  std::optional<std::size_t> last_at_or_before(Energy offset) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), offset);
    if (it == offsets_.begin()) return std::nullopt;
    return static_cast<std::size_t>(std::distance(offsets_.begin(), it) - 1);
  }

  friend bool operator==(const PathRef& a, const PathRef& b) {
    return a.vertices_ == b.vertices_ && a.offsets_ == b.offsets_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Energy> offsets_;
};

inline Energy path_offset(const PathRef& path, std::size_t index) {
  return path.offset(index);
}

/// Result of the unit relaxation. `vertex_map[v]` is the image of original
/// vertex v. `chains` maps each surviving edge, keyed by its image endpoints
/// (lower id first), to the unit chain realizing it, endpoints included.
struct UnitRelaxation {
  WeightedGraph graph;
  std::vector<VertexId> vertex_map;
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> chains;

  /// Unit chain from image a to image b (either orientation).
  std::vector<VertexId> chain(VertexId a, VertexId b) const {
    const bool flipped = a > b;
    auto it = chains.find(flipped ? std::pair{b, a} : std::pair{a, b});
    if (it == chains.end()) return {};
    std::vector<VertexId> out = it->second;
    if (flipped) std::reverse(out.begin(), out.end());
    return out;
  }
};

/// Contract zero-weight edges, then subdivide every weight-w edge into w unit
/// edges. Loops created by contraction are dropped; parallel edges keep the
/// lightest weight.
inline UnitRelaxation unit_relaxation(const WeightedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : graph.edges()) {
    if (e.weight != 0) continue;
    std::size_t a = find(static_cast<std::size_t>(e.u));
    std::size_t b = find(static_cast<std::size_t>(e.v));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // root is always the smallest member
  }

  UnitRelaxation out;
  out.vertex_map.assign(n, -1);
  std::vector<VertexId> class_id(n, -1);
  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (class_id[root] < 0) class_id[root] = next++;
    out.vertex_map[v] = class_id[root];
  }

  std::map<std::pair<VertexId, VertexId>, Energy> lightest;
  for (const Edge& e : graph.edges()) {
    VertexId a = out.vertex_map[static_cast<std::size_t>(e.u)];
    VertexId b = out.vertex_map[static_cast<std::size_t>(e.v)];
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    auto [it, inserted] = lightest.emplace(std::pair{a, b}, e.weight);
    if (!inserted) it->second = std::min(it->second, e.weight);
  }

  std::vector<Edge> edges;
  for (const auto& [key, w] : lightest) {
    std::vector<VertexId> chain{key.first};
    for (Energy step = 1; step < w; ++step) chain.push_back(next++);
    chain.push_back(key.second);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      edges.push_back({chain[i], chain[i + 1], 1});
    }
    out.chains.emplace(key, std::move(chain));
  }
  out.graph = WeightedGraph(static_cast<std::size_t>(next), std::move(edges));
  return out;
}

}  // namespace relay
