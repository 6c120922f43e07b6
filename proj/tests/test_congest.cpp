#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "congestlb/congest.hpp"
#include "congestlb/distance.hpp"
#include "congestlb/errors.hpp"
#include "congestlb/gadgets.hpp"
#include "congestlb/programs.hpp"
#include "oracle.hpp"

#include <random>

using namespace congestlb;

namespace {

Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return GraphBuilder::plain(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return GraphBuilder::plain(n, e);
}

Instance make(Construction c, unsigned k, unsigned P, const Bits& sa, const Bits& sb) {
  return gadgets::build(c, {k, P, false, std::nullopt}, gadgets::make_input(c, sa, sb));
}

// sends `len` bits to every neighbour in round `when`, then outputs
class Blaster : public NodeProgram {
 public:
  Blaster(NodeId who, std::size_t when, std::size_t len) : who_(who), when_(when), len_(len) {}
  std::string name() const override { return "blaster"; }
  std::unique_ptr<NodeProcess> init(const LocalView& v, const PublicParams&) const override {
    struct P : NodeProcess {
      bool loud;
      std::size_t when, len;
      std::optional<NodeOutput> on_round(std::size_t r, const Mailbox&, Mailbox& out) override {
        if (loud && r == when)
          for (auto& slot : out) slot = Bits(len, true);
        if (r > when) return NodeOutput{{"done", 1}};
        return std::nullopt;
      }
    };
    auto p = std::make_unique<P>();
    p->loud = v.id == who_;
    p->when = when_;
    p->len = len_;
    return p;
  }

 private:
  NodeId who_;
  std::size_t when_, len_;
};

// records the round in which each message arrives and the sender's round stamp
class Echo : public NodeProgram {
 public:
  std::string name() const override { return "echo"; }
  std::unique_ptr<NodeProcess> init(const LocalView&, const PublicParams&) const override {
    struct P : NodeProcess {
      std::int64_t bad = 0, seen = 0;
      std::optional<NodeOutput> on_round(std::size_t r, const Mailbox& in, Mailbox& out) override {
        if (r == 0) bad += !in.empty() && std::any_of(in.begin(), in.end(), [](auto& m) { return m.has_value(); });
        for (const auto& m : in)
          if (m) {
            std::size_t pos = 0;
            bad += read_uint(*m, pos, 4) + 1 != r;
            ++seen;
          }
        if (r < 3) {
          for (auto& slot : out) {
            Bits b;
            append_uint(b, r, 4);
            slot = b;
          }
          return std::nullopt;
        }
        return NodeOutput{{"bad", bad}, {"seen", seen}};
      }
    };
    return std::make_unique<P>();
  }
};

}  // namespace

TEST_CASE("uint packing is LSB first") {
  Bits b;
  append_uint(b, 6, 3);
  CHECK(b == Bits{false, true, true});
  std::size_t pos = 0;
  CHECK(read_uint(b, pos, 3) == 6);
  CHECK(pos == 3);
  CHECK(bits_for(0) == 1);
  CHECK(bits_for(255) == 8);
  CHECK(bits_for(256) == 9);
}

TEST_CASE("default message size") {
  CHECK(default_b(2) == 4);
  CHECK(default_b(22) == 12);
  CHECK(default_b(1024) == 22);
}

TEST_CASE("messages sent in round r arrive in round r+1") {
  auto g = cycle_graph(5);
  auto res = run(g, Echo{}, {});
  REQUIRE(res.terminated);
  for (const auto& o : res.outputs) {
    REQUIRE(o);
    CHECK(o->at("bad") == 0);
    CHECK(o->at("seen") == 6);  // two neighbours, three sending rounds
  }
  // ledger is keyed by delivery round
  for (const auto& [round, bits] : res.ledger.per_round()) {
    CHECK(round >= 1);
    CHECK(round <= 3);
    CHECK(bits == 5 * 2 * 4);
  }
  CHECK(res.rounds_used == 3);
}

TEST_CASE("flood_max on a 5-node path") {
  auto g = path_graph(5);
  RunConfig cfg;
  cfg.b = 32;
  auto res = run(g, *flood_max(), cfg);
  CHECK(res.terminated);
  CHECK(res.rounds_used <= 4);
  for (NodeId v = 0; v < 5; ++v) {
    CHECK(res.outputs[v]->at("max") == 4);
    CHECK(res.output_round[v] <= 4);
  }
  std::vector<std::uint64_t> init = {3, 9, 1, 0, 2};
  auto res2 = run(g, *flood_max(init, 4), cfg);
  for (NodeId v = 0; v < 5; ++v) CHECK(res2.outputs[v]->at("max") == 9);
}

TEST_CASE("bfs_layers agrees with the oracle") {
  std::mt19937_64 rng(4);
  std::vector<Instance> insts;
  insts.push_back(make(Construction::DiameterExact, 4, 1, parse_bits("1000"), parse_bits("1000")));
  insts.push_back(make(Construction::DiameterApprox, 4, 2, parse_bits("0110"), parse_bits("1001")));
  insts.push_back(make(Construction::RadiusExact, 8, 1, random_bits(8, 0.5, rng), random_bits(8, 0.5, rng)));
  insts.push_back(make(Construction::Eccentricity, 4, 1, parse_bits("0010"), parse_bits("0010")));
  for (const auto& inst : insts) {
    auto m = oracle::floyd(inst.graph);
    for (NodeId s = 0; s < inst.graph.n(); s += 5) {
      auto res = run(inst.graph, *bfs_layers(s), {});
      REQUIRE(res.terminated);
      for (NodeId v = 0; v < inst.graph.n(); ++v) CHECK(std::uint64_t(res.outputs[v]->at("dist")) == m[s][v]);
    }
  }
}

TEST_CASE("bfs_layers from the centre of a star finishes at once") {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 1; i <= 9; ++i) e.emplace_back(0, i);
  auto g = GraphBuilder::plain(10, e);
  auto res = run(g, *bfs_layers(0), {});
  CHECK(res.terminated);
  CHECK(res.rounds_used <= 2);
  for (NodeId v = 1; v < 10; ++v) CHECK(res.outputs[v]->at("dist") == 1);
}

TEST_CASE("apsp_diameter on a 6-cycle") {
  auto res = run(cycle_graph(6), *apsp_diameter(), {});
  REQUIRE(res.terminated);
  for (const auto& o : res.outputs) {
    CHECK(o->at("diameter") == 3);
    CHECK(o->at("radius") == 3);
    CHECK(o->at("ecc") == 3);
    CHECK_FALSE(o->contains("watch_min_ecc"));
  }
}

TEST_CASE("apsp_diameter on the diameter constructions") {
  auto hit = make(Construction::DiameterExact, 4, 1, parse_bits("0100"), parse_bits("0100"));
  auto res = run(hit.graph, *apsp_diameter(), {});
  for (const auto& o : res.outputs) CHECK(o->at("diameter") >= 5);
  auto miss = make(Construction::DiameterApprox, 4, 1, parse_bits("1100"), parse_bits("0011"));
  auto res2 = run(miss.graph, *apsp_diameter(), {});
  for (const auto& o : res2.outputs) CHECK(o->at("diameter") <= 6);
}

TEST_CASE("apsp_diameter eccentricities match the oracle, weighted too") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 6; ++t) {
    const bool weighted = t % 2;
    std::size_t n = 12 + t;
    std::vector<Edge> edges;
    std::set<std::pair<NodeId, NodeId>> seen;
    for (NodeId v = 1; v < n; ++v) {
      NodeId u = std::uniform_int_distribution<NodeId>(0, v - 1)(rng);
      seen.insert({u, v});
      edges.push_back({u, v, weighted ? std::uniform_int_distribution<Weight>(1, 5)(rng) : 1});
    }
    for (int x = 0; x < 8; ++x) {
      NodeId a = rng() % n, b = rng() % n;
      if (a == b) continue;
      auto key = std::minmax(a, b);
      if (!seen.insert(key).second) continue;
      edges.push_back({key.first, key.second, weighted ? std::uniform_int_distribution<Weight>(1, 5)(rng) : 1});
    }
    Graph g;
    if (weighted) {
      g = GraphBuilder::plain_weighted(n, edges);
    } else {
      std::vector<std::pair<NodeId, NodeId>> p;
      for (auto& e : edges) p.emplace_back(e.u, e.v);
      g = GraphBuilder::plain(n, p);
    }
    auto m = oracle::floyd(g);
    auto e = oracle::eccs(m);
    RunConfig cfg;
    cfg.watch = {0, 2, 3};
    auto res = run(g, *apsp_diameter(), cfg);
    REQUIRE(res.terminated);
    for (NodeId v = 0; v < n; ++v) {
      CHECK(std::uint64_t(res.outputs[v]->at("ecc")) == e[v]);
      CHECK(std::uint64_t(res.outputs[v]->at("diameter")) == oracle::diameter(m));
      CHECK(std::uint64_t(res.outputs[v]->at("radius")) == oracle::radius(m));
      CHECK(std::uint64_t(res.outputs[v]->at("watch_min_ecc")) == std::min({e[0], e[2], e[3]}));
    }
  }
}

TEST_CASE("oversized messages are rejected") {
  auto g = path_graph(4);
  RunConfig cfg;
  cfg.b = 8;
  CHECK_NOTHROW(run(g, Blaster(2, 1, 8), cfg));
  try {
    run(g, Blaster(2, 1, 9), cfg);
    FAIL("no violation raised");
  } catch (const ProtocolViolation& v) {
    CHECK(v.node == 2);
    CHECK(v.round == 1);
  }
  // same rejection every time
  for (int i = 0; i < 3; ++i) CHECK_THROWS_AS(run(g, Blaster(2, 1, 9), cfg), ProtocolViolation);
  // programs that cannot fit their tokens complain up front
  cfg.b = 2;
  CHECK_THROWS_AS(run(g, *apsp_diameter(), cfg), ProtocolViolation);
}

TEST_CASE("runs are deterministic, ledger included") {
  auto inst = make(Construction::RadiusExact, 4, 1, parse_bits("1010"), parse_bits("0011"));
  RunConfig cfg;
  cfg.seed = 77;
  auto a = run(inst.graph, *apsp_diameter(), cfg);
  auto b = run(inst.graph, *apsp_diameter(), cfg);
  CHECK(a.rounds_used == b.rounds_used);
  CHECK(a.outputs == b.outputs);
  CHECK(a.output_round == b.output_round);
  CHECK(a.ledger == b.ledger);
  CHECK(a.ledger.to_csv(inst.graph) == b.ledger.to_csv(inst.graph));
  CHECK(outcome_json(inst.graph, a, &inst.cut) == outcome_json(inst.graph, b, &inst.cut));
}

TEST_CASE("ledger totals are consistent and within the bandwidth") {
  auto inst = make(Construction::DiameterExact, 4, 1, parse_bits("0011"), parse_bits("0110"));
  auto res = run(inst.graph, *apsp_diameter(), {});
  std::uint64_t by_edge = 0, by_round = 0, by_entry = 0;
  for (const auto& [e, bits] : res.ledger.per_edge()) {
    by_edge += bits;
    CHECK(bits <= res.rounds_used * 2 * res.b);
  }
  for (const auto& [r, bits] : res.ledger.per_round()) {
    by_round += bits;
    CHECK(bits <= inst.graph.edge_count() * 2 * res.b);
  }
  for (const auto& x : res.ledger.entries()) by_entry += x.bits;
  CHECK(by_edge == res.ledger.total());
  CHECK(by_round == res.ledger.total());
  CHECK(by_entry == res.ledger.total());
  std::vector<EdgeIndex> all(inst.graph.edge_count());
  for (EdgeIndex e = 0; e < all.size(); ++e) all[e] = e;
  CHECK(res.ledger.bits_on(all) == res.ledger.total());
  auto csv = res.ledger.to_csv(inst.graph);
  CHECK(csv.rfind("round,u,v,bits\n", 0) == 0);
}

TEST_CASE("max_rounds stops a run that never ends") {
  auto g = path_graph(3);
  RunConfig cfg;
  cfg.max_rounds = 5;
  auto res = run(g, Blaster(0, 100, 1), cfg);
  CHECK_FALSE(res.terminated);
  CHECK(res.rounds_used == 5);
}
