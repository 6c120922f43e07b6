#include "congestlb/reduction.hpp"
#include "congestlb/distance.hpp"
#include "congestlb/errors.hpp"
#include "congestlb/programs.hpp"

#include <algorithm>

namespace congestlb {

std::string_view answer_name(Answer a) { return a == Answer::Intersecting ? "Intersecting" : "Disjoint"; }

Answer ground_truth(const DisjointnessInstance& d) {
  return intersects(d.sa, d.sb) ? Answer::Intersecting : Answer::Disjoint;
}

namespace {

struct Channel {
  std::vector<EdgeIndex> cut;
  std::vector<std::size_t> cut_pos;  // edge -> position in cut, or npos
  unsigned index_bits;
  unsigned length_bits;
};

struct Encoded {
  Bits stream;
  std::uint64_t payload = 0;
};

Encoded encode(const Channel& ch, std::vector<const detail::Emission*> msgs, bool done) {
  std::sort(msgs.begin(), msgs.end(), [&](auto* a, auto* b) { return ch.cut_pos[a->edge] < ch.cut_pos[b->edge]; });
  Encoded e;
  for (const auto* m : msgs) {
    e.stream.push_back(true);
    append_uint(e.stream, ch.cut_pos[m->edge], ch.index_bits);
    append_uint(e.stream, m->msg.size(), ch.length_bits);
    e.stream.insert(e.stream.end(), m->msg.begin(), m->msg.end());
    e.payload += m->msg.size();
  }
  e.stream.push_back(false);
  e.stream.push_back(done);
  return e;
}

// Rebuilds the messages for the receiving side; returns the sender's status bit.
bool decode(const Graph& g, const Channel& ch, const std::vector<Owner>& owner, Owner receiver, const Bits& stream,
            std::vector<detail::Emission>& out) {
  std::size_t pos = 0;
  while (true) {
    if (pos >= stream.size()) throw std::logic_error("truncated cut stream");
    if (!stream[pos++]) break;
    auto idx = read_uint(stream, pos, ch.index_bits);
    auto len = read_uint(stream, pos, ch.length_bits);
    if (idx >= ch.cut.size() || pos + len > stream.size()) throw std::logic_error("corrupt cut frame");
    const Edge& e = g.edge(ch.cut[idx]);
    NodeId to = owner[e.u] == receiver ? e.u : e.v;
    NodeId from = to == e.u ? e.v : e.u;
    Bits msg(stream.begin() + static_cast<std::ptrdiff_t>(pos), stream.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
    out.push_back({from, to, ch.cut[idx], g.port_of(to, from), std::move(msg)});
  }
  if (pos + 1 != stream.size()) throw std::logic_error("cut stream has trailing bits");
  return stream[pos];
}

}  // namespace

Transcript simulate_two_party(const Instance& inst, const NodeProgram& prog, const RunConfig& cfg,
                              const DecisionRule& decision) {
  const Graph& g = inst.graph;
  if (inst.owner.size() != g.n()) throw PreconditionError("owner map does not cover every node");
  require_connected(g);
  PublicParams params = make_public_params(g, prog, cfg);

  Channel ch;
  ch.cut = inst.cut;
  ch.cut_pos.assign(g.edge_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < ch.cut.size(); ++i) ch.cut_pos[ch.cut[i]] = i;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if ((inst.owner[g.edge(e).u] != inst.owner[g.edge(e).v]) != (ch.cut_pos[e] != static_cast<std::size_t>(-1)))
      throw PreconditionError("cut does not match the owner map at edge " + std::to_string(e));
  ch.index_bits = ceil_log2(std::max<std::size_t>(ch.cut.size(), 1));
  ch.length_bits = ceil_log2(params.b + 1);

  std::vector<NodeId> alice_nodes, bob_nodes;
  for (NodeId v = 0; v < g.n(); ++v) (inst.owner[v] == Owner::Alice ? alice_nodes : bob_nodes).push_back(v);
  detail::NodeGroup alice(g, prog, params, cfg.edge_flags, cfg.seed, alice_nodes);
  detail::NodeGroup bob(g, prog, params, cfg.edge_flags, cfg.seed, bob_nodes);

  Transcript t;
  t.b = params.b;
  t.rounds = cfg.max_rounds;
  std::vector<detail::Emission> local_a, local_b;  // internal messages awaiting delivery
  Bits stream_ab, stream_ba;                       // what crossed the cut last round
  for (std::size_t r = 0; r <= cfg.max_rounds; ++r) {
    for (const auto& e : local_a) alice.deliver(e);
    for (const auto& e : local_b) bob.deliver(e);
    if (r > 0) {
      std::vector<detail::Emission> in_b, in_a;
      decode(g, ch, inst.owner, Owner::Bob, stream_ab, in_b);
      decode(g, ch, inst.owner, Owner::Alice, stream_ba, in_a);
      for (const auto& e : in_b) bob.deliver(e);
      for (const auto& e : in_a) alice.deliver(e);
    }
    auto out_a = alice.step(r);
    auto out_b = bob.step(r);
    local_a.clear();
    local_b.clear();
    std::vector<const detail::Emission*> cross_ab, cross_ba;
    for (auto& e : out_a) {
      if (alice.owns(e.to))
        local_a.push_back(std::move(e));
      else
        cross_ab.push_back(&e);
    }
    for (auto& e : out_b) {
      if (bob.owns(e.to))
        local_b.push_back(std::move(e));
      else
        cross_ba.push_back(&e);
    }
    bool done_a = alice.all_output() && out_a.empty();
    bool done_b = bob.all_output() && out_b.empty();
    Encoded ab = encode(ch, cross_ab, done_a);
    Encoded ba = encode(ch, cross_ba, done_b);
    RoundTraffic rt{r, ab.payload, ba.payload, ab.stream.size() - ab.payload, ba.stream.size() - ba.payload};
    t.bits_a_to_b += rt.a_to_b;
    t.bits_b_to_a += rt.b_to_a;
    t.framing_a_to_b += rt.framing_a_to_b;
    t.framing_b_to_a += rt.framing_b_to_a;
    t.per_round.push_back(rt);
    stream_ab = std::move(ab.stream);
    stream_ba = std::move(ba.stream);
    // both parties read the two status bits
    if (done_a && done_b) {
      t.terminated = true;
      t.rounds = r;
      break;
    }
  }
  t.outputs.resize(g.n());
  t.output_round.resize(g.n());
  for (NodeId v = 0; v < g.n(); ++v) {
    const auto& grp = inst.owner[v] == Owner::Alice ? alice : bob;
    t.outputs[v] = grp.outputs()[v];
    t.output_round[v] = grp.output_round()[v];
  }
  if (!t.terminated) throw PreconditionError("two-party run did not terminate within " + std::to_string(cfg.max_rounds) + " rounds");
  std::optional<Answer> agreed;
  for (NodeId v = 0; v < g.n(); ++v) {
    auto a = decision.decide(*t.outputs[v]);
    if (!a) throw PreconditionError("decision rule '" + decision.description + "' is undefined on the output of node " + std::to_string(v));
    if (agreed && *agreed != *a) throw PreconditionError("nodes disagree on the answer (node " + std::to_string(v) + ")");
    agreed = a;
  }
  t.answer = agreed.value_or(Answer::Disjoint);
  return t;
}

std::uint64_t implied_round_lower_bound(std::uint64_t k_bits, std::uint64_t cut_size, std::uint64_t b,
                                        const Rational& c_disj) {
  if (k_bits == 0 || cut_size == 0 || b == 0 || c_disj <= 0) throw PreconditionError("lower bound arguments must be positive");
  Rational r = c_disj * Rational(static_cast<std::int64_t>(k_bits)) /
               Rational(static_cast<std::int64_t>(cut_size * 2 * b));
  return static_cast<std::uint64_t>(ceil_rational(r));
}

namespace {

DecisionRule threshold(std::string field, bool at_least, std::int64_t bound) {
  std::string desc = field + (at_least ? " >= " : " <= ") + std::to_string(bound) + " => Intersecting";
  return {desc, [field, at_least, bound](const NodeOutput& o) -> std::optional<Answer> {
            auto it = o.find(field);
            if (it == o.end()) return std::nullopt;
            bool hit = at_least ? it->second >= bound : it->second <= bound;
            return hit ? Answer::Intersecting : Answer::Disjoint;
          }};
}

}  // namespace

DecisionRule reference_decision(const InstanceMeta& meta) {
  const std::int64_t P = meta.P;
  switch (meta.construction) {
    case Construction::DiameterExact: return threshold("diameter", true, 5);
    // strictly between the disjoint 4P+2 and the intersecting 6P+1
    case Construction::DiameterApprox: return threshold("diameter", true, 5 * P + 2);
    case Construction::RadiusExact: return threshold("radius", false, 3);
    case Construction::RadiusApprox: return threshold("radius", false, 5 * P + 1);
    case Construction::Eccentricity: return threshold("watch_min_ecc", false, 4 * P + 1);
    case Construction::RadiusConstDegree: {
      std::int64_t w = log2_exact(meta.k), v = log2_exact(static_cast<std::uint64_t>(w));
      return threshold("radius", false, 2 * v + 2 * w - 1);
    }
    case Construction::Spanner:
      return {"ok == 0 => Intersecting", [](const NodeOutput& o) -> std::optional<Answer> {
                auto it = o.find("ok");
                if (it == o.end()) return std::nullopt;
                return it->second == 0 ? Answer::Intersecting : Answer::Disjoint;
              }};
  }
  throw std::logic_error("unknown construction");
}

std::unique_ptr<NodeProgram> reference_program(const Instance& inst) {
  if (inst.meta.construction == Construction::Spanner)
    return spanner_check(inst.meta.spanner->alpha, inst.meta.spanner->beta);
  return apsp_diameter();
}

RunConfig reference_config(const Instance& inst) {
  RunConfig cfg;
  cfg.values["k"] = inst.meta.k;
  cfg.values["P"] = inst.meta.P;
  if (inst.meta.construction == Construction::Eccentricity)
    for (unsigned i = 0; i < inst.meta.k; ++i) cfg.watch.push_back(inst.graph.id_of(NodeLabel::l(static_cast<int>(i))));
  if (inst.meta.construction == Construction::Spanner) {
    cfg.edge_flags.assign(inst.graph.edge_count(), false);
    for (EdgeIndex e : inst.h_edges) cfg.edge_flags[e] = true;
  }
  return cfg;
}

nlohmann::json reduction_report(const Instance& inst, const Transcript& t, const Rational& c_disj) {
  nlohmann::json j;
  j["construction"] = construction_name(inst.meta.construction);
  j["k"] = inst.meta.k;
  j["P"] = inst.meta.P;
  j["b"] = t.b;
  j["cut_size"] = inst.cut.size();
  j["rounds"] = t.rounds;
  j["payload_bits"] = t.payload_bits();
  j["framed_bits"] = t.framed_bits();
  j["budget_bits"] = static_cast<std::uint64_t>(t.rounds) * inst.cut.size() * 2 * t.b;
  j["answer"] = answer_name(t.answer);
  j["ground_truth"] = answer_name(ground_truth({inst.input.sa, inst.input.sb}));
  j["implied_lower_bound"] = implied_round_lower_bound(inst.input.sa.size(), inst.cut.size(), t.b, c_disj);
  j["bits_a_to_b"] = t.bits_a_to_b;
  j["bits_b_to_a"] = t.bits_b_to_a;
  j["c_disj"] = to_string(c_disj);
  return j;
}

}  // namespace congestlb
