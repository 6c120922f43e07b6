#include "congestlb/congest.hpp"
#include "congestlb/distance.hpp"
#include "congestlb/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace congestlb {

void append_uint(Bits& out, std::uint64_t value, unsigned width) {
  if (width < 64 && (value >> width) != 0)
    throw std::logic_error("value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
  for (unsigned i = 0; i < width; ++i) out.push_back((value >> i) & 1u);
}

std::uint64_t read_uint(const Bits& in, std::size_t& pos, unsigned width) {
  if (pos + width > in.size()) throw std::out_of_range("message too short");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i)
    if (in[pos + i]) v |= std::uint64_t{1} << i;
  pos += width;
  return v;
}

unsigned bits_for(std::uint64_t max_value) { return std::max(1u, static_cast<unsigned>(std::bit_width(max_value))); }

void TrafficLedger::record(std::size_t round, EdgeIndex edge, std::uint64_t bits) {
  auto [it, fresh] = slot_.try_emplace({round, edge}, entries_.size());
  if (fresh)
    entries_.push_back({round, edge, bits});
  else
    entries_[it->second].bits += bits;
  per_edge_[edge] += bits;
  per_round_[round] += bits;
  total_ += bits;
}

std::uint64_t TrafficLedger::bits_on(const std::vector<EdgeIndex>& edges) const {
  std::uint64_t s = 0;
  for (EdgeIndex e : edges)
    if (auto it = per_edge_.find(e); it != per_edge_.end()) s += it->second;
  return s;
}

std::string TrafficLedger::to_csv(const Graph& g) const {
  std::ostringstream os;
  os << "round,u,v,bits\n";
  for (const auto& e : entries_) os << e.round << ',' << g.edge(e.edge).u << ',' << g.edge(e.edge).v << ',' << e.bits << '\n';
  return os.str();
}

bool operator==(const TrafficLedger& a, const TrafficLedger& b) {
  if (a.entries_.size() != b.entries_.size() || a.total_ != b.total_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto &x = a.entries_[i], &y = b.entries_[i];
    if (x.round != y.round || x.edge != y.edge || x.bits != y.bits) return false;
  }
  return true;
}

std::size_t default_b(std::size_t n) { return 2 * ceil_log2(std::max<std::size_t>(n, 1)) + 2; }

PublicParams make_public_params(const Graph& g, const NodeProgram& prog, const RunConfig& cfg) {
  PublicParams p;
  p.n = g.n();
  for (const auto& e : g.edges()) p.max_weight = std::max(p.max_weight, e.w);
  p.watch = cfg.watch;
  p.values = cfg.values;
  p.b = cfg.b ? *cfg.b : std::max(default_b(g.n()), prog.min_message_bits(p));
  if (p.b < 1) throw PreconditionError("b must be >= 1");
  return p;
}

namespace detail {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

NodeGroup::NodeGroup(const Graph& g, const NodeProgram& prog, const PublicParams& params,
                     const std::vector<bool>& edge_flags, std::uint64_t seed, std::vector<NodeId> members)
    : g_(g), b_(params.b), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  member_.assign(g.n(), false);
  procs_.resize(g.n());
  inbox_.resize(g.n());
  outputs_.resize(g.n());
  output_round_.assign(g.n(), 0);
  for (NodeId v : members_) {
    member_[v] = true;
    LocalView view;
    view.id = v;
    view.degree = g.degree(v);
    for (const auto& nb : g.neighbors(v)) {
      view.port_weights.push_back(nb.w);
      view.port_flags.push_back(!edge_flags.empty() && edge_flags.at(nb.edge));
    }
    view.rng_seed = splitmix(seed ^ (std::uint64_t{v} << 20));
    procs_[v] = prog.init(view, params);
    inbox_[v].assign(view.degree, std::nullopt);
  }
}

void NodeGroup::deliver(const Emission& e) {
  if (!member_[e.to]) throw std::logic_error("delivery to a node outside the group");
  inbox_[e.to][e.to_port] = e.msg;
}

std::vector<Emission> NodeGroup::step(std::size_t round) {
  std::vector<Emission> out;
  for (NodeId v : members_) {
    const std::size_t deg = g_.degree(v);
    Mailbox outbox(deg);
    auto result = procs_[v]->on_round(round, inbox_[v], outbox);
    inbox_[v].assign(deg, std::nullopt);
    if (outbox.size() != deg)
      throw ProtocolViolation(v, round, "outbox has " + std::to_string(outbox.size()) + " ports, degree is " +
                                            std::to_string(deg));
    if (result) {
      if (outputs_[v] && *outputs_[v] != *result) throw ProtocolViolation(v, round, "output changed after it was emitted");
      if (!outputs_[v]) {
        outputs_[v] = std::move(result);
        output_round_[v] = round;
      }
    }
    auto nbs = g_.neighbors(v);
    for (std::size_t p = 0; p < deg; ++p) {
      if (!outbox[p]) continue;
      if (outbox[p]->size() > b_)
        throw ProtocolViolation(v, round, "message of " + std::to_string(outbox[p]->size()) + " bits exceeds b = " +
                                              std::to_string(b_));
      const auto& nb = nbs[p];
      out.push_back({v, nb.node, nb.edge, g_.port_of(nb.node, v), std::move(*outbox[p])});
    }
  }
  return out;
}

bool NodeGroup::all_output() const {
  return std::all_of(members_.begin(), members_.end(), [&](NodeId v) { return outputs_[v].has_value(); });
}

}  // namespace detail

RunOutcome run(const Graph& g, const NodeProgram& prog, const RunConfig& cfg) {
  require_connected(g);
  PublicParams params = make_public_params(g, prog, cfg);
  std::vector<NodeId> all(g.n());
  std::iota(all.begin(), all.end(), NodeId{0});
  detail::NodeGroup group(g, prog, params, cfg.edge_flags, cfg.seed, all);
  RunOutcome res;
  res.b = params.b;
  std::vector<detail::Emission> pending;
  res.rounds_used = cfg.max_rounds;
  for (std::size_t r = 0; r <= cfg.max_rounds; ++r) {
    for (const auto& e : pending) {
      group.deliver(e);
      res.ledger.record(r, e.edge, e.msg.size());
    }
    pending = group.step(r);
    if (group.all_output() && pending.empty()) {
      res.terminated = true;
      res.rounds_used = r;
      break;
    }
  }
  res.outputs = group.outputs();
  res.output_round = group.output_round();
  return res;
}

nlohmann::json outcome_json(const Graph& g, const RunOutcome& out, const std::vector<EdgeIndex>* cut) {
  nlohmann::json j;
  j["rounds"] = out.rounds_used;
  j["terminated"] = out.terminated;
  j["b"] = out.b;
  j["total_bits"] = out.ledger.total();
  if (cut) j["per_cut_bits"] = out.ledger.bits_on(*cut);
  nlohmann::json outs = nlohmann::json::array();
  for (NodeId v = 0; v < g.n(); ++v) {
    nlohmann::json o{{"id", v}, {"label", g.label(v).str()}};
    if (out.outputs[v]) {
      o["output"] = *out.outputs[v];
      o["round"] = out.output_round[v];
    } else {
      o["output"] = nullptr;
    }
    outs.push_back(std::move(o));
  }
  j["outputs"] = std::move(outs);
  return j;
}

}  // namespace congestlb
