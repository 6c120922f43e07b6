#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "congestlb/bits.hpp"
#include "congestlb/distance.hpp"
#include "congestlb/errors.hpp"
#include "congestlb/gadgets.hpp"
#include "congestlb/graph_io.hpp"
#include "congestlb/verify.hpp"
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

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return GraphBuilder::plain(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return GraphBuilder::plain(leaves + 1, e);
}

// connected: random spanning tree plus extra edges
Graph random_connected(std::size_t n, std::size_t extra, std::mt19937_64& rng, bool weighted) {
  std::vector<Edge> e;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::uniform_int_distribution<Weight> wd(1, 9);
  auto add = [&](NodeId a, NodeId b) {
    if (a == b) return;
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) return;
    e.push_back({key.first, key.second, weighted ? wd(rng) : 1});
  };
  for (NodeId v = 1; v < n; ++v) add(v, std::uniform_int_distribution<NodeId>(0, v - 1)(rng));
  std::uniform_int_distribution<NodeId> nd(0, n - 1);
  for (std::size_t i = 0; i < extra; ++i) add(nd(rng), nd(rng));
  if (weighted) return GraphBuilder::plain_weighted(n, e);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (auto& x : e) pairs.emplace_back(x.u, x.v);
  return GraphBuilder::plain(n, pairs);
}

}  // namespace

TEST_CASE("bfs on a three node path") {
  auto g = path_graph(3);
  auto r = bfs_distances(g, 0);
  CHECK(r.at(0) == 0);
  CHECK(r.at(1) == 1);
  CHECK(r.at(2) == 2);
}

TEST_CASE("source is at distance zero, and bfs keeps the triangle property") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    auto g = random_connected(30, 25, rng, false);
    for (NodeId s = 0; s < g.n(); s += 7) {
      auto r = bfs_distances(g, s);
      CHECK(r.at(s) == 0);
      for (const auto& e : g.edges()) {
        auto a = r.at(e.u), b = r.at(e.v);
        CHECK((a > b ? a - b : b - a) <= 1);
      }
    }
  }
}

TEST_CASE("dijkstra on one weighted edge") {
  auto g = GraphBuilder::plain_weighted(2, {{0, 1, 7}});
  auto r = dijkstra_distances(g, 0);
  CHECK(r.at(0) == 0);
  CHECK(r.at(1) == 7);
  CHECK_THROWS_AS(bfs_distances(g, 0), PreconditionError);
}

TEST_CASE("dijkstra with unit weights agrees with bfs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    auto g = random_connected(40, 40, rng, false);
    std::vector<Edge> unit(g.edges());
    auto gw = GraphBuilder::plain_weighted(g.n(), unit);
    for (NodeId s = 0; s < g.n(); s += 5) CHECK(bfs_distances(g, s).dist == dijkstra_distances(gw, s).dist);
  }
}

TEST_CASE("weighted distances equal those of the subdivided graph") {
  std::mt19937_64 rng(5);
  auto g = random_connected(15, 15, rng, true);
  // subdivide every edge of weight w into w unit edges
  std::vector<std::pair<NodeId, NodeId>> pairs;
  NodeId next = static_cast<NodeId>(g.n());
  for (const auto& e : g.edges()) {
    NodeId prev = e.u;
    for (Weight s = 1; s < e.w; ++s) {
      pairs.emplace_back(prev, next);
      prev = next++;
    }
    pairs.emplace_back(prev, e.v);
  }
  auto sub = GraphBuilder::plain(next, pairs);
  for (NodeId s = 0; s < g.n(); ++s) {
    auto a = dijkstra_distances(g, s), b = bfs_distances(sub, s);
    for (NodeId v = 0; v < g.n(); ++v) CHECK(a.at(v) == b.at(v));
  }
}

TEST_CASE("4-cycle and K_{1,5}") {
  auto c4 = cycle_graph(4);
  CHECK(diameter(c4) == 2);
  CHECK(radius(c4) == 2);
  for (auto e : all_eccentricities(c4)) CHECK(e == 2);
  auto s = star(5);
  CHECK(radius(s) == 1);
  CHECK(diameter(s) == 2);
  CHECK(eccentricity(s, 0) == 1);
}

TEST_CASE("eccentricities, diameter and radius match Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 12; ++t) {
    bool weighted = t % 3 == 2;
    auto g = random_connected(25 + t, 10 + 3 * t, rng, weighted);
    auto d = oracle::floyd(g);
    auto e = all_eccentricities(g);
    auto oe = oracle::eccs(d);
    CHECK(std::vector<std::uint64_t>(e.begin(), e.end()) == oe);
    CHECK(diameter(g) == oracle::diameter(d));
    CHECK(radius(g) == oracle::radius(d));
    for (NodeId v = 0; v < g.n(); v += 4) CHECK(eccentricity(g, v) == oe[v]);
  }
}

TEST_CASE("disconnected graphs are rejected") {
  auto g = GraphBuilder::plain(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(diameter(g), DisconnectedGraphError);
  CHECK_THROWS_AS(radius(g), DisconnectedGraphError);
  CHECK_THROWS_AS(eccentricity(g, 0), DisconnectedGraphError);
  auto r = bfs_distances(g, 0);
  CHECK_FALSE(r.reachable(2));
}

TEST_CASE("max degree") {
  CHECK(max_degree(GraphBuilder::plain(5, {})) == 0);
  CHECK(max_degree(complete_graph(4)) == 3);
  CHECK(edge_count(complete_graph(4)) == 6);
}

TEST_CASE("sparsity check") {
  auto tree = star(31);
  CHECK(edge_count(tree) == 31);
  CHECK(sparsity_check(tree, Rational(1)));
  CHECK_FALSE(sparsity_check(complete_graph(32), Rational(1)));

  // diameter-exact at k=64 with the calibrated constant
  auto inst = gadgets::diameter_exact({64, 1, false, std::nullopt},
                                      gadgets::make_input(Construction::DiameterExact, Bits(64, true), Bits(64, true)));
  const std::size_t k = 64, lg = 6;
  CHECK(inst.graph.n() == 2 * k + 4 * lg + 6);
  CHECK(sparsity_check(inst.graph, sparsity_constant()));

  // the densest family: shaved radius-exact with every input edge present
  const std::size_t big = 1024, len = big * 10;
  auto dense = gadgets::radius_exact({unsigned(big), 1, true, std::nullopt},
                                     gadgets::make_input(Construction::RadiusExact, Bits(len, true), Bits(len, true)));
  CHECK(sparsity_check(dense.graph, sparsity_constant()));
  CHECK_FALSE(sparsity_check(dense.graph, Rational(3, 2)));
}

TEST_CASE("edge count of diameter-exact from its building blocks") {
  for (unsigned k : {4u, 8u, 16u, 64u}) {
    for (bool ones : {false, true}) {
      Bits s(k, ones);
      auto inst = gadgets::diameter_exact({k, 1, false, std::nullopt},
                                          gadgets::make_input(Construction::DiameterExact, s, s));
      std::size_t lg = log2_exact(k);
      // per side: k*lg bit edges, k edges to the level-k hub, the hub pair, a or b to
      // the 2*lg bit nodes and both hubs, one input edge per zero bit; the cut adds
      // 2*lg bit crossings, the hub crossing and a-b
      std::size_t zeros = ones ? 0 : k;
      std::size_t expected = 2 * (k * lg + k + 1 + 2 * lg + 2 + zeros) + 2 * lg + 2;
      INFO("k=" << k << " ones=" << ones);
      CHECK(inst.graph.edge_count() == expected);
    }
  }
}

TEST_CASE("labels render, parse and order canonically") {
  std::vector<NodeLabel> all = {
      NodeLabel::l(3),
      NodeLabel::r(3),
      NodeLabel::l_prime(3),
      NodeLabel::r_prime(3),
      NodeLabel::f(2),
      NodeLabel::t(2),
      NodeLabel::f_prime(2),
      NodeLabel::t_prime(2),
      NodeLabel::hub_l(0),
      NodeLabel::hub_l(1),
      NodeLabel::hub_l(2),
      NodeLabel::hub_l_split(4),
      NodeLabel::hub_r(1, Copy::Two),
      NodeLabel::a(),
      NodeLabel::b(),
      NodeLabel::x(1),
      NodeLabel::clique_pad(5),
      NodeLabel::vertex(7),
      NodeLabel::l(0, Copy::One),
      NodeLabel::path(NodeLabel::l(1), NodeLabel::hub_l(1), 1, 2),
      NodeLabel::tree(NodeLabel::f(0), 3, 5),
      NodeLabel::tree(NodeLabel::path(NodeLabel::l(1), NodeLabel::r(2, Copy::One), 0, 1), 0, 2),
  };
  std::vector<std::string> text = {"l3",  "r3",     "l'3", "r'3",      "f2", "t2", "f'2", "t'2",
                                   "lk",  "lk+1",   "lk+2", "lk+1[4]", "rk+1@2", "a",  "b",  "x1",
                                   "c5",  "v7",     "l0@1", "y(l1,lk+1,1,2)", "tree(f0,3,5)",
                                   "tree(y(l1,r2@1,0,1),0,2)"};
  REQUIRE(all.size() == text.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].str() == text[i]);
    CHECK(NodeLabel::parse(text[i]) == all[i]);
  }
  // role rank first, then copy, then index
  CHECK(NodeLabel::l(9) < NodeLabel::r(0));
  CHECK(NodeLabel::l(9) < NodeLabel::l(0, Copy::One));
  CHECK(NodeLabel::l(0, Copy::One) < NodeLabel::l(0, Copy::Two));
  CHECK(NodeLabel::l(2) < NodeLabel::l(10));
  CHECK(NodeLabel::hub_r(2) < NodeLabel::hub_l_split(0));
  CHECK(NodeLabel::vertex(0) > NodeLabel::clique_pad(100));
  CHECK(NodeLabel::path(NodeLabel::l(0), NodeLabel::a(), 0, 5) < NodeLabel::path(NodeLabel::l(1), NodeLabel::a(), 0, 1));
  CHECK(NodeLabel::path(NodeLabel::l(0), NodeLabel::a(), 0, 5) < NodeLabel::path(NodeLabel::l(0), NodeLabel::a(), 1, 1));
  CHECK(NodeLabel::tree(NodeLabel::l(0), 0, 9) < NodeLabel::tree(NodeLabel::l(0), 1, 1));
  for (const char* bad : {"", "q1", "l", "l-1", "y(l1,l2,0)", "tree(l0,1)", "l1@3", "lk+", "x"})
    CHECK_THROWS_AS(NodeLabel::parse(bad), std::invalid_argument);
}

TEST_CASE("builder rejects malformed edges") {
  GraphBuilder b;
  b.add_edge(NodeLabel::l(0), NodeLabel::r(0));
  CHECK_THROWS_AS(b.add_edge(NodeLabel::l(0), NodeLabel::l(0)), PreconditionError);
  CHECK_THROWS_AS(b.add_edge(NodeLabel::r(0), NodeLabel::l(0)), PreconditionError);
  CHECK_THROWS_AS(b.add_edge(NodeLabel::l(1), NodeLabel::r(1), 3), PreconditionError);
  GraphBuilder w(true);
  CHECK_THROWS_AS(w.add_edge(NodeLabel::l(1), NodeLabel::r(1), 0), PreconditionError);
  b.add_path(NodeLabel::l(0), NodeLabel::a(), 3, 0);
  auto g = b.build();
  CHECK(g.n() == 5);
  CHECK(bfs_distances(g, g.id_of(NodeLabel::l(0))).at(g.id_of(NodeLabel::a())) == 3);
  CHECK(g.find(NodeLabel::path(NodeLabel::l(0), NodeLabel::a(), 0, 2)).has_value());
  // ids follow label order, ports follow neighbour ids
  for (NodeId v = 1; v < g.n(); ++v) CHECK(g.label(v - 1) < g.label(v));
  for (NodeId v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t p = 0; p < nb.size(); ++p) CHECK(g.port_of(v, nb[p].node) == p);
  }
}

TEST_CASE("bit strings") {
  CHECK(bits_to_string(parse_bits("0110")) == "0110");
  CHECK(bits_to_string(parse_bits("0x6f")) == "01101111");
  CHECK_THROWS_AS(parse_bits("01a"), PreconditionError);
  CHECK(intersects(parse_bits("0001"), parse_bits("0001")));
  CHECK_FALSE(intersects(parse_bits("0011"), parse_bits("1100")));
  CHECK(bit_of(6, 0) == false);
  CHECK(bit_of(6, 1) == true);
  CHECK(log2_exact(16) == 4);
  CHECK_THROWS_AS(log2_exact(12), PreconditionError);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(5) == 3);
}

TEST_CASE("graph documents round-trip through JSON") {
  auto inst = gadgets::radius_exact({4, 1, true, std::nullopt},
                                    gadgets::make_input(Construction::RadiusExact, parse_bits("01101001"),
                                                        parse_bits("10000001")));
  auto doc = instance_document(inst);
  auto j = to_json(doc);
  auto back = document_from_json(nlohmann::json::parse(j.dump()));
  CHECK(to_json(back) == j);
  CHECK(back.graph.n() == inst.graph.n());
  CHECK(back.cut == inst.cut);
  auto loaded = load_instance(back);
  CHECK(all_pass(verify_instance(loaded)));
  CHECK(checks_json(verify_instance(loaded)) == checks_json(verify_instance(inst)));

  auto plain = plain_document(cycle_graph(5));
  auto pj = to_json(plain);
  CHECK(to_json(document_from_json(pj)) == pj);

  auto broken = j;
  broken["nodes"][0]["label"] = "zz";
  CHECK_THROWS(document_from_json(broken));
}
