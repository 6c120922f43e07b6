#pragma once

#include "congestlb/distance.hpp"
#include "congestlb/instance.hpp"

#include <optional>
#include <vector>

namespace congestlb {

// The spanner instance is an Instance with h_edges filled in.
using SpannerInstance = Instance;

SpannerInstance build_spanner_instance(const SpannerParams& params, unsigned k, const BitInput& input);

struct SpannerWitness {
  NodeId u;
  NodeId v;
  Distance d_g;
  std::optional<Distance> d_h;  // nullopt: v unreachable from u in H
};

struct SpannerVerdict {
  bool ok = true;
  std::optional<SpannerWitness> witness;  // lexicographically least violating pair
};

// Is H (given as edge indices of g) an (alpha, beta)-spanner of g?
SpannerVerdict verify_spanner(const Graph& g, const std::vector<EdgeIndex>& h, const Rational& alpha,
                              const Rational& beta);

// H as a graph on the same node ids.
Graph subgraph(const Graph& g, const std::vector<EdgeIndex>& h);

}  // namespace congestlb
