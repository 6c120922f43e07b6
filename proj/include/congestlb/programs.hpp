#pragma once

#include "congestlb/congest.hpp"
#include "congestlb/rational.hpp"

#include <memory>
#include <vector>

namespace congestlb {

// Output {"dist"}: hop distance from `source`. A node's distance is the round
// in which the 1-bit pulse first reaches it.
std::unique_ptr<NodeProgram> bfs_layers(NodeId source);

// Output {"max"}: maximum initial value (default: the node's id). Nodes answer
// at public round bound "round_bound" (default n-1). `value_bits` is public;
// 0 means ceil(log2 n) bits.
std::unique_ptr<NodeProgram> flood_max(std::vector<std::uint64_t> initial = {}, unsigned value_bits = 0);

// Output {"ecc", "diameter", "radius"} plus {"watch_min_ecc"} when the public
// watch set is non-empty. Pipelined (distance, source) tokens, smallest
// unsent first, for 2n rounds (plus (n-1)*maxW on weighted graphs), then three
// n-round floods: max ecc, min ecc, min ecc over the watch set.
std::unique_ptr<NodeProgram> apsp_diameter();

// Output {"ok"}: 1 iff the H-flagged ports form an (alpha, beta)-spanner.
// Two interleaved APSP runs (G on even rounds, H on odd rounds over flagged
// ports), a local check against every source, then an n-round AND flood.
std::unique_ptr<NodeProgram> spanner_check(const Rational& alpha, const Rational& beta);

// Rounds the APSP phase of apsp_diameter() uses on a graph with these parameters.
std::size_t apsp_phase_rounds(const PublicParams& p);

}  // namespace congestlb
