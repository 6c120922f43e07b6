#pragma once

#include "congestlb/bits.hpp"
#include "congestlb/graph.hpp"
#include "congestlb/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace congestlb {

enum class Owner : std::uint8_t { Alice, Bob };

enum class Construction {
  DiameterExact,
  DiameterApprox,
  RadiusExact,
  RadiusApprox,
  Eccentricity,
  RadiusConstDegree,
  Spanner,
};

std::string_view construction_name(Construction c);  // "diameter-exact", ...
Construction parse_construction(std::string_view name);
const std::vector<Construction>& all_constructions();

enum class Polarity { EdgeOnZero, EdgeOnOne };
std::string_view polarity_name(Polarity p);
Polarity parse_polarity(std::string_view name);

struct BitInput {
  Bits sa;
  Bits sb;
  Polarity polarity = Polarity::EdgeOnOne;
};

struct ConstructionParams {
  unsigned k = 4;
  unsigned P = 1;
  bool shaved = false;
  std::optional<Rational> eps;
};

struct SpannerParams {
  Rational alpha{1};
  Rational beta{0};
  unsigned x = 1;
  bool weighted = false;
  std::optional<unsigned> clique_pad;

  // alpha*x + beta, checked to be an even positive integer
  unsigned path_length() const;
};

struct InstanceMeta {
  Construction construction = Construction::DiameterExact;
  unsigned k = 4;
  unsigned P = 1;
  bool shaved = false;
  std::optional<SpannerParams> spanner;
};

struct Instance {
  Graph graph;
  std::vector<Owner> owner;            // per node id
  std::vector<EdgeIndex> cut;          // edges whose endpoints differ in owner
  std::vector<EdgeIndex> input_edges;  // edges that exist because of the input
  std::vector<EdgeIndex> h_edges;      // spanner instances only: H = E minus input edges
  InstanceMeta meta;
  BitInput input;
  std::vector<std::string> warnings;

  bool intersecting() const { return intersects(input.sa, input.sb); }
};

// Side a label belongs to: L-side roles and everything hanging off them are Alice's.
Owner natural_owner(const NodeLabel& label);

// Collects the graph plus the label pairs created by the input, then
// computes owners and the cut.
class InstanceAssembler {
 public:
  InstanceAssembler(InstanceMeta meta, BitInput input, bool weighted = false);

  GraphBuilder& builder() { return builder_; }
  void add_input_edge(const NodeLabel& a, const NodeLabel& b, std::int64_t w = 1);
  void add_input_path(const NodeLabel& from, const NodeLabel& to, int length, int lane);
  // marks an already existing edge as input-dependent
  void mark_input_edge(const NodeLabel& a, const NodeLabel& b);
  void warn(std::string message) { warnings_.push_back(std::move(message)); }

  Instance finish();

 private:
  InstanceMeta meta_;
  BitInput input_;
  GraphBuilder builder_;
  std::vector<std::pair<NodeLabel, NodeLabel>> input_pairs_;
  std::vector<std::string> warnings_;
};

}  // namespace congestlb
