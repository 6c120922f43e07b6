#include "congestlb/instance.hpp"
#include "congestlb/errors.hpp"

#include <algorithm>
#include <array>

namespace congestlb {

namespace {

constexpr std::array<std::pair<Construction, std::string_view>, 7> kNames{{
    {Construction::DiameterExact, "diameter-exact"},
    {Construction::DiameterApprox, "diameter-approx"},
    {Construction::RadiusExact, "radius-exact"},
    {Construction::RadiusApprox, "radius-approx"},
    {Construction::Eccentricity, "eccentricity"},
    {Construction::RadiusConstDegree, "radius-const-degree"},
    {Construction::Spanner, "spanner"},
}};

}  // namespace

std::string_view construction_name(Construction c) {
  for (const auto& [k, name] : kNames)
    if (k == c) return name;
  throw std::logic_error("unknown construction");
}

Construction parse_construction(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw PreconditionError("unknown construction '" + std::string(name) + "'");
}

const std::vector<Construction>& all_constructions() {
  static const std::vector<Construction> all = [] {
    std::vector<Construction> v;
    for (const auto& [k, n] : kNames) v.push_back(k);
    return v;
  }();
  return all;
}

std::string_view polarity_name(Polarity p) { return p == Polarity::EdgeOnZero ? "EdgeOnZero" : "EdgeOnOne"; }

Polarity parse_polarity(std::string_view name) {
  if (name == "EdgeOnZero") return Polarity::EdgeOnZero;
  if (name == "EdgeOnOne") return Polarity::EdgeOnOne;
  throw PreconditionError("unknown polarity '" + std::string(name) + "'");
}

unsigned SpannerParams::path_length() const {
  Rational p = alpha * Rational(static_cast<std::int64_t>(x)) + beta;
  if (p.denominator() != 1 || p <= 0)
    throw PreconditionError("P = alpha*x + beta = " + to_string(p) + " is not a positive integer");
  if (p.numerator() % 2 != 0) throw PreconditionError("P = alpha*x + beta = " + to_string(p) + " is odd");
  return static_cast<unsigned>(p.numerator());
}

Owner natural_owner(const NodeLabel& label) {
  switch (label.role()) {
    case Role::L:
    case Role::LPrime:
    case Role::F:
    case Role::T:
    case Role::HubL:
    case Role::HubLSplit:
    case Role::A:
    case Role::X:
    case Role::CliquePad:
      return Owner::Alice;
    case Role::R:
    case Role::RPrime:
    case Role::FPrime:
    case Role::TPrime:
    case Role::HubR:
    case Role::HubRSplit:
    case Role::B:
      return Owner::Bob;
    case Role::Path: {
      Owner a = natural_owner(label.first());
      if (natural_owner(label.second()) != a) throw std::logic_error("path " + label.str() + " crosses the cut");
      return a;
    }
    case Role::Tree:
      return natural_owner(label.first());
    case Role::Vertex:
      break;
  }
  throw std::logic_error("label " + label.str() + " has no owner");
}

InstanceAssembler::InstanceAssembler(InstanceMeta meta, BitInput input, bool weighted)
    : meta_(std::move(meta)), input_(std::move(input)), builder_(weighted) {}

void InstanceAssembler::add_input_edge(const NodeLabel& a, const NodeLabel& b, std::int64_t w) {
  builder_.add_edge(a, b, w);
  input_pairs_.emplace_back(a, b);
}

void InstanceAssembler::add_input_path(const NodeLabel& from, const NodeLabel& to, int length, int lane) {
  builder_.add_path(from, to, length, lane);
  NodeLabel prev = from;
  for (int step = 1; step < length; ++step) {
    NodeLabel mid = NodeLabel::path(from, to, lane, step);
    input_pairs_.emplace_back(prev, mid);
    prev = mid;
  }
  input_pairs_.emplace_back(prev, to);
}

void InstanceAssembler::mark_input_edge(const NodeLabel& a, const NodeLabel& b) {
  if (!builder_.has_edge(a, b)) throw std::logic_error("no edge " + a.str() + "-" + b.str() + " to mark");
  input_pairs_.emplace_back(a, b);
}

Instance InstanceAssembler::finish() {
  Instance inst;
  inst.graph = builder_.build();
  const Graph& g = inst.graph;
  inst.owner.resize(g.n());
  for (NodeId v = 0; v < g.n(); ++v) inst.owner[v] = natural_owner(g.label(v));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (inst.owner[g.edge(e).u] != inst.owner[g.edge(e).v]) inst.cut.push_back(e);
  for (const auto& [a, b] : input_pairs_) {
    auto e = g.find_edge(g.id_of(a), g.id_of(b));
    if (!e) throw std::logic_error("input edge " + a.str() + "-" + b.str() + " vanished");
    inst.input_edges.push_back(*e);
  }
  std::sort(inst.input_edges.begin(), inst.input_edges.end());
  inst.meta = meta_;
  inst.input = input_;
  inst.warnings = warnings_;
  return inst;
}

}  // namespace congestlb
