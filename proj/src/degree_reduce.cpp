#include "congestlb/errors.hpp"
#include "congestlb/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <span>

namespace congestlb::gadgets {

std::vector<NodeLabel> attach_tree(GraphBuilder& b, const NodeLabel& root, int tree_id,
                                   const std::vector<NodeLabel>& nbrs, TreeLeaves mode) {
  if (nbrs.size() < 2) throw PreconditionError("a tree needs at least two leaves");
  for (const auto& x : nbrs) b.remove_edge(root, x);
  std::vector<NodeLabel> sorted = nbrs;
  std::sort(sorted.begin(), sorted.end());
  const int height = static_cast<int>(ceil_log2(sorted.size()));
  std::vector<std::pair<NodeLabel, NodeLabel>> fresh_leaf;  // neighbour -> split leaf

  auto split = [](std::span<const NodeLabel> s) {
    std::size_t half = (s.size() + 1) / 2;
    return std::pair{s.subspan(0, half), s.subspan(half)};
  };
  // subtree at heap position `pos` (depth `depth`) hanging below `parent`
  std::function<void(const NodeLabel&, int, std::span<const NodeLabel>, int)> grow =
      [&](const NodeLabel& parent, int pos, std::span<const NodeLabel> leaves, int depth) {
        if (depth == height) {
          if (mode == TreeLeaves::Neighbors) {
            b.add_edge(parent, leaves[0]);
          } else {
            NodeLabel t = NodeLabel::tree(root, tree_id, pos);
            b.add_edge(parent, t);
            b.add_edge(t, leaves[0]);
            fresh_leaf.emplace_back(leaves[0], t);
          }
          return;
        }
        NodeLabel t = NodeLabel::tree(root, tree_id, pos);
        b.add_edge(parent, t);
        auto [lo, hi] = split(leaves);
        grow(t, 2 * pos, lo, depth + 1);
        if (!hi.empty()) grow(t, 2 * pos + 1, hi, depth + 1);
      };
  auto [lo, hi] = split(sorted);
  grow(root, 2, lo, 1);
  grow(root, 3, hi, 1);

  std::vector<NodeLabel> out;
  if (mode == TreeLeaves::Split) {
    for (const auto& x : nbrs)
      for (const auto& [nb, leaf] : fresh_leaf)
        if (nb == x) out.push_back(leaf);
  }
  return out;
}

Graph degree_reduce(const Graph& g, NodeId v, const std::vector<EdgeIndex>& edge_subset) {
  g.check_node(v);
  if (g.weighted()) throw PreconditionError("degree_reduce works on unweighted graphs");
  std::vector<NodeLabel> nbrs;
  for (EdgeIndex e : edge_subset) {
    const Edge& ed = g.edge(e);
    if (ed.u != v && ed.v != v)
      throw PreconditionError("edge " + std::to_string(e) + " is not incident to " + g.label(v).str());
    nbrs.push_back(g.label(ed.u == v ? ed.v : ed.u));
  }
  std::sort(nbrs.begin(), nbrs.end());
  if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) throw PreconditionError("duplicate edge in subset");
  if (nbrs.size() < 3) throw PreconditionError("degree_reduce needs at least 3 edges (got " +
                                               std::to_string(nbrs.size()) + ")");
  const NodeLabel& root = g.label(v);
  int tree_id = 0;
  while (g.find(NodeLabel::tree(root, tree_id, 2))) ++tree_id;
  GraphBuilder b = GraphBuilder::from(g);
  attach_tree(b, root, tree_id, nbrs, TreeLeaves::Neighbors);
  return b.build();
}

}  // namespace congestlb::gadgets
