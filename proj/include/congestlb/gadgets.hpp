#pragma once

#include "congestlb/instance.hpp"

#include <vector>

namespace congestlb::gadgets {

Instance diameter_exact(const ConstructionParams& params, const BitInput& input);
Instance diameter_approx(const ConstructionParams& params, const BitInput& input);
Instance radius_exact(const ConstructionParams& params, const BitInput& input);
Instance radius_approx(const ConstructionParams& params, const BitInput& input);
Instance eccentricity_gadget(const ConstructionParams& params, const BitInput& input);
Instance radius_const_degree(const ConstructionParams& params, const BitInput& input);

// Any construction except the spanner one (see spanner.hpp).
Instance build(Construction c, const ConstructionParams& params, const BitInput& input);

Polarity polarity_for(Construction c);
std::size_t required_input_length(Construction c, unsigned k, bool shaved);
std::size_t expected_cut_size(Construction c, unsigned k, bool shaved);
BitInput make_input(Construction c, Bits sa, Bits sb);

// How a tree replaces the edges root-nbr.
enum class TreeLeaves {
  Neighbors,  // the former neighbours are the leaves
  Split,      // every former edge survives on a fresh leaf (vertex splitting)
};

// Replaces the edges between `root` and `nbrs` by a binary tree of height
// ceil(log2 |nbrs|) rooted at `root`; leaves follow canonical label order.
// Internal nodes are tree(root, tree_id, heap position). Split mode returns
// the fresh leaf adjacent to each neighbour, in the order of `nbrs`.
std::vector<NodeLabel> attach_tree(GraphBuilder& b, const NodeLabel& root, int tree_id,
                                   const std::vector<NodeLabel>& nbrs, TreeLeaves mode);

// Replaces the given edges (all incident to v, at least 3 of them) by a
// balanced binary tree rooted at v.
Graph degree_reduce(const Graph& g, NodeId v, const std::vector<EdgeIndex>& edge_subset);

enum class StretchProblem { DiameterApprox, RadiusApprox, EccApprox };
// smallest integer P >= 1 for which the gap survives a (c - eps)-approximation
unsigned min_stretch_P(StretchProblem problem, const Rational& eps);

}  // namespace congestlb::gadgets
