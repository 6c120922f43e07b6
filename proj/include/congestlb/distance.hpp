#pragma once

#include "congestlb/graph.hpp"
#include "congestlb/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace congestlb {

using Distance = std::uint64_t;

struct DistanceReport {
  NodeId source = 0;
  std::vector<std::optional<Distance>> dist;  // nullopt = unreachable

  bool reachable(NodeId v) const { return dist.at(v).has_value(); }
  Distance at(NodeId v) const;  // throws when unreachable
};

DistanceReport bfs_distances(const Graph& g, NodeId source);
DistanceReport dijkstra_distances(const Graph& g, NodeId source);
// bfs on unweighted graphs, dijkstra otherwise
DistanceReport shortest_paths(const Graph& g, NodeId source);

// All of these need a connected graph and throw DisconnectedGraphError.
Distance eccentricity(const Graph& g, NodeId u);
Distance diameter(const Graph& g);
Distance radius(const Graph& g);
std::vector<Distance> all_eccentricities(const Graph& g);

std::size_t max_degree(const Graph& g);
std::size_t edge_count(const Graph& g);
// edge_count <= c * n * log2(n)
bool sparsity_check(const Graph& g, const Rational& c);

// Raw single-source distances with kUnreached for unreachable nodes; used by
// hot loops that must not allocate optionals. Works for both graph kinds.
inline constexpr Distance kUnreached = ~Distance{0};
void raw_distances(const Graph& g, NodeId source, std::vector<Distance>& out);

// Throws DisconnectedGraphError naming node 0 and the first node it cannot reach.
void require_connected(const Graph& g);

}  // namespace congestlb
