#include "congestlb/graph.hpp"
#include "congestlb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace congestlb {

void Graph::check_node(NodeId v) const {
  if (v >= n())
    throw std::out_of_range("node id " + std::to_string(v) + " out of range (n = " + std::to_string(n()) + ")");
}

const NodeLabel& Graph::label(NodeId v) const {
  check_node(v);
  return labels_[v];
}

std::optional<NodeId> Graph::find(const NodeLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::id_of(const NodeLabel& label) const {
  auto id = find(label);
  if (!id) throw std::out_of_range("no node labelled " + label.str());
  return *id;
}

std::span<const Neighbor> Graph::neighbors(NodeId v) const {
  check_node(v);
  return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(NodeId v) const {
  check_node(v);
  return offsets_[v + 1] - offsets_[v];
}

const Edge& Graph::edge(EdgeIndex e) const {
  if (e >= edges_.size()) throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
  return edges_[e];
}

std::optional<EdgeIndex> Graph::find_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v, [](const Neighbor& a, NodeId x) { return a.node < x; });
  if (it == nb.end() || it->node != v) return std::nullopt;
  return it->edge;
}

std::size_t Graph::port_of(NodeId from, NodeId to) const {
  auto nb = neighbors(from);
  auto it = std::lower_bound(nb.begin(), nb.end(), to, [](const Neighbor& a, NodeId x) { return a.node < x; });
  if (it == nb.end() || it->node != to)
    throw std::out_of_range("node " + std::to_string(to) + " is not a neighbour of " + std::to_string(from));
  return static_cast<std::size_t>(it - nb.begin());
}

GraphBuilder GraphBuilder::from(const Graph& g) {
  GraphBuilder b(g.weighted());
  for (const auto& l : g.labels()) b.add_node(l);
  for (const auto& e : g.edges()) b.add_edge(g.label(e.u), g.label(e.v), static_cast<std::int64_t>(e.w));
  return b;
}

std::uint32_t GraphBuilder::ensure(const NodeLabel& label) {
  auto [it, fresh] = handles_.try_emplace(label, static_cast<std::uint32_t>(labels_.size()));
  if (fresh) {
    labels_.push_back(label);
    adj_.emplace_back();
  }
  return it->second;
}

void GraphBuilder::add_node(const NodeLabel& label) { ensure(label); }

std::uint32_t GraphBuilder::handle(const NodeLabel& label) const {
  auto it = handles_.find(label);
  if (it == handles_.end()) throw std::out_of_range("no node labelled " + label.str());
  return it->second;
}

void GraphBuilder::add_edge(const NodeLabel& a, const NodeLabel& b, std::int64_t w) {
  if (a == b) throw PreconditionError("self-loop at " + a.str());
  if (w < 1) throw PreconditionError("nonpositive weight " + std::to_string(w) + " on " + a.str() + "-" + b.str());
  if (w != 1 && !weighted_) throw PreconditionError("weight on an unweighted graph: " + a.str() + "-" + b.str());
  auto ha = ensure(a);
  auto hb = ensure(b);
  if (adj_[ha].contains(hb)) throw PreconditionError("parallel edge " + a.str() + "-" + b.str());
  adj_[ha][hb] = static_cast<Weight>(w);
  adj_[hb][ha] = static_cast<Weight>(w);
  ++edges_;
}

void GraphBuilder::remove_edge(const NodeLabel& a, const NodeLabel& b) {
  auto ha = handle(a);
  auto hb = handle(b);
  if (adj_[ha].erase(hb) == 0) throw std::out_of_range("no edge " + a.str() + "-" + b.str());
  adj_[hb].erase(ha);
  --edges_;
}

bool GraphBuilder::has_edge(const NodeLabel& a, const NodeLabel& b) const {
  auto ia = handles_.find(a);
  auto ib = handles_.find(b);
  if (ia == handles_.end() || ib == handles_.end()) return false;
  return adj_[ia->second].contains(ib->second);
}

std::optional<Weight> GraphBuilder::weight(const NodeLabel& a, const NodeLabel& b) const {
  auto ia = handles_.find(a);
  auto ib = handles_.find(b);
  if (ia == handles_.end() || ib == handles_.end()) return std::nullopt;
  auto it = adj_[ia->second].find(ib->second);
  if (it == adj_[ia->second].end()) return std::nullopt;
  return it->second;
}

void GraphBuilder::add_path(const NodeLabel& from, const NodeLabel& to, int length, int lane) {
  if (length < 1) throw PreconditionError("path length must be >= 1");
  NodeLabel prev = from;
  for (int step = 1; step < length; ++step) {
    NodeLabel mid = NodeLabel::path(from, to, lane, step);
    add_edge(prev, mid);
    prev = mid;
  }
  add_edge(prev, to);
}

std::vector<NodeLabel> GraphBuilder::neighbors(const NodeLabel& label) const {
  std::vector<NodeLabel> out;
  for (const auto& [h, w] : adj_[handle(label)]) out.push_back(labels_[h]);
  std::sort(out.begin(), out.end());
  return out;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.weighted_ = weighted_;
  const std::size_t n = labels_.size();
  // handle -> id by canonical order
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return labels_[x] < labels_[y]; });
  std::vector<NodeId> id(n);
  g.labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    id[order[i]] = static_cast<NodeId>(i);
    g.labels_.push_back(labels_[order[i]]);
    g.index_.emplace_hint(g.index_.end(), labels_[order[i]], static_cast<NodeId>(i));
  }
  for (std::size_t h = 0; h < n; ++h)
    for (const auto& [h2, w] : adj_[h])
      if (id[h] < id[h2]) g.edges_.push_back({id[h], id[h2], w});
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<std::size_t> deg(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    const auto& ed = g.edges_[e];
    g.adj_[fill[ed.u]++] = {ed.v, ed.w, e};
    g.adj_[fill[ed.v]++] = {ed.u, ed.w, e};
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  return g;
}

Graph GraphBuilder::plain(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node(NodeLabel::vertex(static_cast<int>(i)));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    b.add_edge(NodeLabel::vertex(static_cast<int>(u)), NodeLabel::vertex(static_cast<int>(v)));
  }
  return b.build();
}

Graph GraphBuilder::plain_weighted(std::size_t n, const std::vector<Edge>& edges) {
  GraphBuilder b(true);
  for (std::size_t i = 0; i < n; ++i) b.add_node(NodeLabel::vertex(static_cast<int>(i)));
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint out of range");
    b.add_edge(NodeLabel::vertex(static_cast<int>(e.u)), NodeLabel::vertex(static_cast<int>(e.v)),
               static_cast<std::int64_t>(e.w));
  }
  return b.build();
}

}  // namespace congestlb
