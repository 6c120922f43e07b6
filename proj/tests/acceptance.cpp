// Acceptance run: one PASS/FAIL line per criterion.

#include "congestlb/distance.hpp"
#include "congestlb/errors.hpp"
#include "congestlb/gadgets.hpp"
#include "congestlb/programs.hpp"
#include "congestlb/reduction.hpp"
#include "congestlb/spanner.hpp"
#include "congestlb/verify.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace congestlb;

namespace {

struct Tally {
  std::size_t ok = 0, total = 0;
  std::vector<std::string> failures;
  void check(bool pass, const std::string& what) {
    ++total;
    ok += pass;
    if (!pass && failures.size() < 5) failures.push_back(what);
  }
  bool all() const { return ok == total && total > 0; }
};

int failed = 0;

void report(int id, const std::string& title, const Tally& t, double seconds, double limit, const std::string& note = "") {
  bool pass = t.all() && (limit <= 0 || seconds < limit);
  failed += !pass;
  std::printf("AC%-2d %s  %s: %zu/%zu checks, %.2f s%s%s\n", id, pass ? "PASS" : "FAIL", title.c_str(), t.ok, t.total,
              seconds, limit > 0 ? (" (limit " + std::to_string(int(limit)) + " s)").c_str() : "",
              note.empty() ? "" : ("; " + note).c_str());
  for (const auto& f : t.failures) std::printf("       failed: %s\n", f.c_str());
  std::fflush(stdout);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Instance make(Construction c, unsigned k, unsigned P, const Bits& sa, const Bits& sb, bool shaved = false) {
  return gadgets::build(c, {k, P, shaved, std::nullopt}, gadgets::make_input(c, sa, sb));
}

std::string tag(Construction c, unsigned k, unsigned P, const Bits& sa, const Bits& sb) {
  std::ostringstream s;
  s << construction_name(c) << " k=" << k << " P=" << P << " sa=" << bits_to_string(sa) << " sb=" << bits_to_string(sb);
  return s.str();
}

double density(std::size_t len) { return 1.0 / std::sqrt(double(len)); }

// exhaustive for short strings, otherwise `trials` seeded random pairs; forced cases always included
std::vector<InputCase> cases(std::size_t len, bool exhaustive, std::size_t trials, std::uint64_t seed) {
  return input_cases(len, exhaustive, trials, seed, density(len));
}

std::vector<NodeId> with_role(const Graph& g, Role r) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.n(); ++v)
    if (g.label(v).role() == r && g.label(v).copy() == Copy::None) out.push_back(v);
  return out;
}

void ac1() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (unsigned k : {4u, 8u, 16u})
    for (const auto& c : cases(k, k == 4, 200, 100 + k)) {
      auto inst = make(Construction::DiameterExact, k, 1, c.sa, c.sb);
      auto d = diameter(inst.graph);
      t.check((d >= 5) == intersects(c.sa, c.sb), tag(Construction::DiameterExact, k, 1, c.sa, c.sb));
    }
  report(1, "diameter-exact: diameter >= 5 iff intersecting", t, since(t0), 60);
}

void ac2() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (unsigned k : {4u, 8u})
    for (unsigned P : {1u, 2u, 3u, 5u})
      for (const auto& c : cases(k, false, 100, 200 + 10 * k + P)) {
        auto inst = make(Construction::DiameterApprox, k, P, c.sa, c.sb);
        auto d = diameter(inst.graph);
        bool ok = intersects(c.sa, c.sb) ? d == 6 * P + 1 : d <= 4 * P + 2;
        t.check(ok, tag(Construction::DiameterApprox, k, P, c.sa, c.sb) + " diameter " + std::to_string(d));
      }
  report(2, "diameter-approx: 6P+1 when intersecting, <= 4P+2 when disjoint", t, since(t0), 120);
}

void ac3() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (bool shaved : {false, true})
    for (unsigned k : {4u, 8u, 16u}) {
      std::size_t len = gadgets::required_input_length(Construction::RadiusExact, k, shaved);
      for (const auto& c : cases(len, k == 4, 200, 300 + k + shaved)) {
        auto inst = make(Construction::RadiusExact, k, 1, c.sa, c.sb, shaved);
        auto r = radius(inst.graph);
        bool I = intersects(c.sa, c.sb);
        t.check((r == 3) == I && (I || r >= 4),
                tag(Construction::RadiusExact, k, 1, c.sa, c.sb) + (shaved ? " shaved" : "") + " radius " +
                    std::to_string(r));
      }
    }
  report(3, "radius-exact (plain and shaved): radius 3 iff intersecting, else >= 4", t, since(t0), 0,
         "shaved k=4 enumerates all 65536 pairs");
}

void ac4() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (bool shaved : {false, true})
    for (unsigned k : {4u, 8u})
      for (unsigned P : {1u, 2u, 3u, 5u}) {
        std::size_t len = gadgets::required_input_length(Construction::RadiusApprox, k, shaved);
        for (const auto& c : cases(len, false, 100, 400 + 10 * k + P + shaved)) {
          auto inst = make(Construction::RadiusApprox, k, P, c.sa, c.sb, shaved);
          auto e = all_eccentricities(inst.graph);
          auto r = *std::min_element(e.begin(), e.end());
          bool in_lprime = false;
          for (NodeId v = 0; v < inst.graph.n(); ++v)
            in_lprime = in_lprime || (e[v] == r && inst.graph.label(v).role() == Role::LPrime);
          bool ok = (intersects(c.sa, c.sb) ? r == 4 * P + 1 : r >= 6 * P + 1) && in_lprime;
          t.check(ok, tag(Construction::RadiusApprox, k, P, c.sa, c.sb) + (shaved ? " shaved" : "") + " radius " +
                          std::to_string(r));
        }
      }
  report(4, "radius-approx: 4P+1 / >= 6P+1, a minimiser in L'", t, since(t0), 0);
}

void ac5() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (unsigned k : {4u, 8u})
    for (unsigned P : {1u, 2u, 3u, 5u})
      for (const auto& c : cases(k, false, 100, 500 + 10 * k + P)) {
        auto inst = make(Construction::Eccentricity, k, P, c.sa, c.sb);
        Distance lo = kUnreached, hi = 0;
        for (NodeId v : with_role(inst.graph, Role::L)) {
          auto e = eccentricity(inst.graph, v);
          lo = std::min(lo, e);
          hi = std::max(hi, e);
        }
        bool ok = intersects(c.sa, c.sb) ? lo == 3 * P + 1 : (lo == 5 * P + 1 && hi == 5 * P + 1);
        t.check(ok, tag(Construction::Eccentricity, k, P, c.sa, c.sb));
      }
  report(5, "eccentricity: min over L is 3P+1 / all of L at 5P+1", t, since(t0), 0);
}

void ac6() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  std::size_t exactly5 = 0, instances = 0;
  for (auto [k, trials] : {std::pair{16u, std::size_t{200}}, std::pair{256u, std::size_t{5}}}) {
    const std::int64_t w = log2_exact(k), v = log2_exact(std::uint64_t(w)), T = 2 * v + 2 * w - 1;
    // every input edge present
    auto full = make(Construction::RadiusConstDegree, k, 1, Bits(k, true), Bits(k, true));
    t.check(max_degree(full.graph) == 5, "k=" + std::to_string(k) + " full graph max degree");
    for (const auto& c : cases(k, false, trials, 600 + k)) {
      auto inst = make(Construction::RadiusConstDegree, k, 1, c.sa, c.sb);
      auto md = max_degree(inst.graph);
      ++instances;
      exactly5 += md == 5;
      // degree 5 needs an l_i that kept its q-edge
      const bool any_a = std::find(c.sa.begin(), c.sa.end(), true) != c.sa.end();
      auto r = static_cast<std::int64_t>(radius(inst.graph));
      bool I = intersects(c.sa, c.sb);
      t.check(md == (any_a ? 5u : 4u),
              tag(Construction::RadiusConstDegree, k, 1, c.sa, c.sb) + " degree " + std::to_string(md));
      t.check(I ? r <= T : r >= T + 1, tag(Construction::RadiusConstDegree, k, 1, c.sa, c.sb) + " radius " +
                                           std::to_string(r));
    }
  }
  std::string note = "max degree 5 on " + std::to_string(exactly5) + "/" + std::to_string(instances) +
                     " instances, 4 exactly where Alice's string is all zeros";
  report(6, "constant degree, k=16 and k=256: radius threshold iff intersecting, max degree 5", t, since(t0), 0,
         note);
}

std::pair<Graph, std::vector<EdgeIndex>> subdivide(const Graph& g, const std::vector<EdgeIndex>& h) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<bool> from_h, in_h(g.edge_count(), false);
  for (auto e : h) in_h[e] = true;
  NodeId next = static_cast<NodeId>(g.n());
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    NodeId prev = e.u;
    for (Weight s = 1; s < e.w; ++s) {
      pairs.emplace_back(prev, next);
      from_h.push_back(in_h[i]);
      prev = next++;
    }
    pairs.emplace_back(prev, e.v);
    from_h.push_back(in_h[i]);
  }
  Graph sub = GraphBuilder::plain(next, pairs);
  std::vector<EdgeIndex> sh;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (from_h[i]) sh.push_back(*sub.find_edge(pairs[i].first, pairs[i].second));
  return {sub, sh};
}

void ac7() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  struct Tuple {
    std::int64_t a, b;
    unsigned x;
    bool weighted;
  };
  for (auto tp : {Tuple{1, 3, 1, false}, Tuple{2, 4, 1, false}, Tuple{1, 1, 1, false}, Tuple{2, 4, 3, true}}) {
    SpannerParams p;
    p.alpha = Rational(tp.a);
    p.beta = Rational(tp.b);
    p.x = tp.x;
    p.weighted = tp.weighted;
    for (unsigned k : {4u, 8u, 16u})
      for (const auto& c : cases(k, false, 50, 700 + k + tp.x)) {
        auto in = gadgets::make_input(Construction::Spanner, c.sa, c.sb);
        auto inst = build_spanner_instance(p, k, in);
        bool ok = verify_spanner(inst.graph, inst.h_edges, p.alpha, p.beta).ok;
        std::string what = "(" + std::to_string(tp.a) + "," + std::to_string(tp.b) + "," + std::to_string(tp.x) + ") " +
                           tag(Construction::Spanner, k, 0, c.sa, c.sb);
        t.check(ok == !intersects(c.sa, c.sb), what);
        if (tp.x == 1) {
          SpannerParams q = p;
          q.weighted = !p.weighted;
          auto other = build_spanner_instance(q, k, in);
          t.check(verify_spanner(other.graph, other.h_edges, p.alpha, p.beta).ok == ok, what + " other mode");
        } else if (k <= 8) {
          // unit subdivision, judged on pairs of original nodes
          auto [sub, sh] = subdivide(inst.graph, inst.h_edges);
          std::vector<Edge> he;
          for (auto e : sh) he.push_back(sub.edge(e));
          auto dg = oracle::floyd(sub), dh = oracle::floyd(sub.n(), he);
          bool sub_ok = true;
          for (NodeId u = 0; u < inst.graph.n(); ++u)
            for (NodeId v = 0; v < inst.graph.n(); ++v)
              sub_ok = sub_ok && dh[u][v] <= std::uint64_t(tp.a) * dg[u][v] + std::uint64_t(tp.b);
          t.check(sub_ok == ok, what + " unit subdivision");
        }
      }
  }
  report(7, "spanner: (alpha,beta)-spanner iff disjoint; weighted and unweighted agree", t, since(t0), 0,
         "(2,4,3) weighted stands in for (2,5,3): alpha*x+beta must be even");
}

void ac8() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  const Rational c = sparsity_constant();
  std::mt19937_64 rng(800);
  double worst = 0;
  auto side = [](const NodeLabel& x) { return natural_owner(x); };
  for (auto con : all_constructions()) {
    for (unsigned k : {4u, 8u, 16u, 64u, 256u}) {
      if (con == Construction::RadiusConstDegree && (k < 16 || k == 64)) continue;
      for (bool shaved : {false, true}) {
        if (shaved && con != Construction::RadiusExact && con != Construction::RadiusApprox) continue;
        const std::size_t lg = log2_exact(k);
        std::size_t want = 0;
        switch (con) {
          case Construction::DiameterExact: want = 2 * lg + 2; break;  // bit pairs, hub pair, a-b
          case Construction::RadiusExact: want = shaved ? 3 * lg : 2 * lg + 1; break;
          case Construction::RadiusApprox: want = 2 * (shaved ? 3 * lg : 2 * lg + 1); break;  // two copies
          default: want = 2 * lg + 1; break;  // bit pairs and one hub pair
        }
        std::size_t len = gadgets::required_input_length(con, k, shaved);
        for (int fill = 0; fill < 3; ++fill) {
          // random, all ones, all zeros: input edges make either extreme the densest
          Bits sa = random_bits(len, 0.5, rng), sb = random_bits(len, 0.5, rng);
          if (fill) sa = sb = Bits(len, fill == 1);
          Instance inst;
          if (con == Construction::Spanner) {
            SpannerParams p;
            p.alpha = Rational(1);
            p.beta = Rational(3);
            inst = build_spanner_instance(p, k, gadgets::make_input(con, sa, sb));
          } else {
            inst = make(con, k, 2, sa, sb, shaved);
          }
          std::size_t crossing = 0;
          for (const auto& e : inst.graph.edges())
            crossing += side(inst.graph.label(e.u)) != side(inst.graph.label(e.v));
          std::string what = std::string(construction_name(con)) + " k=" + std::to_string(k) + (shaved ? " shaved" : "") +
                             " fill=" + std::to_string(fill);
          t.check(inst.cut.size() == want && crossing == want,
                  what + " cut " + std::to_string(inst.cut.size()) + " want " + std::to_string(want));
          t.check(sparsity_check(inst.graph, c), what + " sparsity");
          double n = double(inst.graph.n());
          worst = std::max(worst, double(inst.graph.edge_count()) / (n * std::log2(n)));
        }
      }
    }
  }
  char note[96];
  std::snprintf(note, sizeof note, "c = %s, densest instance at %.3f n log2 n", to_string(c).c_str(), worst);
  report(8, "cut sizes match their counts; edges <= c n log2 n", t, since(t0), 0, note);
}

// sends one oversized message from node 1 in round 2
class Oversize : public NodeProgram {
 public:
  std::string name() const override { return "oversize"; }
  std::unique_ptr<NodeProcess> init(const LocalView& v, const PublicParams& p) const override {
    struct P : NodeProcess {
      bool loud;
      std::size_t b;
      std::optional<NodeOutput> on_round(std::size_t r, const Mailbox&, Mailbox& out) override {
        if (loud && r == 2) out[0] = Bits(b + 1, false);
        return r > 3 ? std::optional<NodeOutput>(NodeOutput{}) : std::nullopt;
      }
    };
    auto x = std::make_unique<P>();
    x->loud = v.id == 1;
    x->b = p.b;
    return x;
  }
};

void ac9() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  std::mt19937_64 rng(900);
  std::vector<Instance> pool;
  const std::vector<Construction> kinds = {Construction::DiameterExact, Construction::DiameterApprox,
                                           Construction::RadiusExact, Construction::RadiusApprox,
                                           Construction::Eccentricity};
  for (int i = 0; i < 20; ++i) {
    auto con = kinds[i % kinds.size()];
    unsigned k = i < 10 ? 4 : 8;
    pool.push_back(make(con, k, 1 + i % 2, random_bits(k, 0.4, rng), random_bits(k, 0.4, rng)));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& g = pool[i].graph;
    NodeId s = static_cast<NodeId>(rng() % g.n());
    auto res = run(g, *bfs_layers(s), {});
    auto want = bfs_distances(g, s);
    bool same = res.terminated;
    for (NodeId v = 0; v < g.n() && same; ++v) same = std::uint64_t(res.outputs[v]->at("dist")) == want.at(v);
    t.check(same, "bfs_layers instance " + std::to_string(i));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& g = pool[i].graph;
    auto res = run(g, *apsp_diameter(), {});
    auto d = diameter(g);
    bool same = res.terminated;
    for (NodeId v = 0; v < g.n() && same; ++v) same = std::uint64_t(res.outputs[v]->at("diameter")) == d;
    t.check(same, "apsp_diameter instance " + std::to_string(i));
  }
  std::vector<std::pair<NodeId, std::size_t>> seen;
  for (int rep = 0; rep < 3; ++rep) {
    try {
      run(pool[0].graph, Oversize{}, {});
      t.check(false, "oversized message accepted");
    } catch (const ProtocolViolation& v) {
      seen.emplace_back(v.node, v.round);
    }
  }
  t.check(seen.size() == 3 && seen[0] == std::pair<NodeId, std::size_t>{1, 2} && seen[1] == seen[0] &&
              seen[2] == seen[0],
          "oversized message rejected at node 1, round 2 on every run");
  report(9, "simulator vs oracle: bfs_layers and apsp_diameter; > b bits rejected", t, since(t0), 0);
}

void ac10() {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  std::mt19937_64 rng(1000);
  std::size_t runs = 0;
  for (auto con : all_constructions()) {
    unsigned k = con == Construction::RadiusConstDegree ? 16 : 4;
    for (int i = 0; i < 8; ++i) {
      bool shaved = con == Construction::RadiusExact && i % 2;
      std::size_t len = gadgets::required_input_length(con, k, shaved);
      Bits sa = random_bits(len, density(len), rng), sb = random_bits(len, density(len), rng);
      if (i == 0) sa = sb = Bits(len, true);
      if (i == 1) sa = Bits(len, false), sb = Bits(len, true);
      InstanceConfig icfg;
      icfg.construction = con;
      icfg.params = {k, 1u + i % 2, shaved, std::nullopt};
      icfg.spanner.alpha = Rational(1);
      icfg.spanner.beta = Rational(3);
      auto inst = build_instance(icfg, sa, sb);
      auto prog = reference_program(inst);
      auto cfg = reference_config(inst);
      auto tr = simulate_two_party(inst, *prog, cfg, reference_decision(inst.meta));
      auto mono = run(inst.graph, *prog, cfg);
      ++runs;
      std::string what = tag(con, k, icfg.params.P, sa, sb);
      t.check(tr.answer == ground_truth({sa, sb}), what + " answer");
      t.check(tr.payload_bits() == mono.ledger.bits_on(inst.cut), what + " payload vs ledger");
      t.check(tr.payload_bits() <= tr.rounds * inst.cut.size() * 2 * tr.b, what + " budget");
    }
  }
  t.check(runs >= 50, "at least 50 runs");
  // hand arithmetic: ceil(c k / (cut 2b))
  t.check(implied_round_lower_bound(1024, 22, 32, Rational(1)) == 1, "1024/(22*64) -> 1");
  t.check(implied_round_lower_bound(65536, 18, 34, Rational(1)) == 54, "65536/(18*68) = 53.5 -> 54");
  t.check(implied_round_lower_bound(1u << 20, 40, 42, Rational(1, 2)) == 157, "2^19/(40*84) = 156.04 -> 157");
  report(10, "reduction: answers sound, payload = ledger cut bits, within budget", t, since(t0), 0,
         std::to_string(runs) + " harness runs");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> all = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10};
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      all[i]();
    } catch (const std::exception& e) {
      ++failed;
      std::printf("AC%-2zu FAIL  exception: %s\n", i + 1, e.what());
    }
  }
  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAILED" : "OK", failed);
  return failed ? 1 : 0;
}
