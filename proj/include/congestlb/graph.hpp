#pragma once

#include "congestlb/node_label.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace congestlb {

using NodeId = std::uint32_t;
using EdgeIndex = std::uint32_t;
using Weight = std::uint64_t;

struct Edge {
  NodeId u;  // u < v
  NodeId v;
  Weight w;
};

struct Neighbor {
  NodeId node;
  Weight w;
  EdgeIndex edge;
};

// Immutable undirected graph. Node ids follow canonical label order,
// neighbours are sorted by id (the port order), edges are sorted by (u, v).
class Graph {
 public:
  std::size_t n() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool weighted() const { return weighted_; }

  const NodeLabel& label(NodeId v) const;
  const std::vector<NodeLabel>& labels() const { return labels_; }
  std::optional<NodeId> find(const NodeLabel& label) const;
  NodeId id_of(const NodeLabel& label) const;  // throws if absent

  std::span<const Neighbor> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const;
  std::optional<EdgeIndex> find_edge(NodeId u, NodeId v) const;
  // position of `to` in neighbors(from)
  std::size_t port_of(NodeId from, NodeId to) const;

  void check_node(NodeId v) const;

 private:
  friend class GraphBuilder;
  std::vector<NodeLabel> labels_;
  std::map<NodeLabel, NodeId> index_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adj_;
  std::vector<Edge> edges_;
  bool weighted_ = false;
};

// Mutable construction-time graph keyed by label.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool weighted = false) : weighted_(weighted) {}
  static GraphBuilder from(const Graph& g);

  bool weighted() const { return weighted_; }
  void add_node(const NodeLabel& label);
  bool has_node(const NodeLabel& label) const { return handles_.contains(label); }
  // adds missing endpoints; rejects self-loops, parallel edges, weights < 1
  void add_edge(const NodeLabel& a, const NodeLabel& b, std::int64_t w = 1);
  void remove_edge(const NodeLabel& a, const NodeLabel& b);
  bool has_edge(const NodeLabel& a, const NodeLabel& b) const;
  std::optional<Weight> weight(const NodeLabel& a, const NodeLabel& b) const;
  // length 1 is a plain edge, otherwise length-1 path nodes y(from,to,lane,step)
  void add_path(const NodeLabel& from, const NodeLabel& to, int length, int lane = 0);
  std::vector<NodeLabel> neighbors(const NodeLabel& label) const;  // canonical order
  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_; }

  Graph build() const;

  // n plain vertices v0..v{n-1}
  static Graph plain(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges);
  static Graph plain_weighted(std::size_t n, const std::vector<Edge>& edges);

 private:
  std::uint32_t handle(const NodeLabel& label) const;
  std::uint32_t ensure(const NodeLabel& label);

  std::vector<NodeLabel> labels_;
  std::map<NodeLabel, std::uint32_t> handles_;
  std::vector<std::map<std::uint32_t, Weight>> adj_;
  std::size_t edges_ = 0;
  bool weighted_ = false;
};

}  // namespace congestlb
