#include "congestlb/verify.hpp"
#include "congestlb/distance.hpp"
#include "congestlb/errors.hpp"
#include "congestlb/gadgets.hpp"
#include "congestlb/spanner.hpp"

#include <algorithm>

namespace congestlb {

using nlohmann::json;

Instance build_instance(const InstanceConfig& cfg, const Bits& sa, const Bits& sb) {
  BitInput input = gadgets::make_input(cfg.construction, sa, sb);
  if (cfg.construction == Construction::Spanner) return build_spanner_instance(cfg.spanner, cfg.params.k, input);
  return gadgets::build(cfg.construction, cfg.params, input);
}

std::size_t input_length(const InstanceConfig& cfg) {
  return gadgets::required_input_length(cfg.construction, cfg.params.k, cfg.params.shaved);
}

Instance load_instance(const GraphDocument& doc) {
  InstanceConfig cfg;
  cfg.construction = parse_construction(doc.construction);
  const json& p = doc.params;
  try {
    cfg.params.k = p.at("k").get<unsigned>();
    cfg.params.P = p.value("P", 1u);
    cfg.params.shaved = p.value("shaved", false);
    if (cfg.construction == Construction::Spanner) {
      cfg.spanner.alpha = parse_rational(p.at("alpha").get<std::string>());
      cfg.spanner.beta = parse_rational(p.at("beta").get<std::string>());
      cfg.spanner.x = p.at("x").get<unsigned>();
      cfg.spanner.weighted = p.at("weighted").get<bool>();
      if (p.contains("clique_pad") && !p.at("clique_pad").is_null()) cfg.spanner.clique_pad = p.at("clique_pad").get<unsigned>();
    }
    Bits sa = parse_bits(p.at("sa").get<std::string>());
    Bits sb = parse_bits(p.at("sb").get<std::string>());
    Instance fresh = build_instance(cfg, sa, sb);
    Instance inst;
    inst.graph = doc.graph;
    inst.meta = fresh.meta;
    inst.input = fresh.input;
    inst.warnings = fresh.warnings;
    inst.cut = doc.cut;
    for (std::size_t v = 0; v < doc.owner.size(); ++v) {
      if (!doc.owner[v]) throw PreconditionError("instance document has a node without owner");
      inst.owner.push_back(*doc.owner[v]);
    }
    if (inst.owner.size() != inst.graph.n()) throw PreconditionError("owner list does not cover every node");
    // map input edges (and H) through labels; missing ones are reported by verify
    auto map_edges = [&](const std::vector<EdgeIndex>& src, std::vector<EdgeIndex>& dst) {
      for (EdgeIndex e : src) {
        const Edge& ed = fresh.graph.edge(e);
        auto u = inst.graph.find(fresh.graph.label(ed.u)), v = inst.graph.find(fresh.graph.label(ed.v));
        if (!u || !v) continue;
        if (auto idx = inst.graph.find_edge(*u, *v)) dst.push_back(*idx);
      }
      std::sort(dst.begin(), dst.end());
    };
    map_edges(fresh.input_edges, inst.input_edges);
    if (doc.h_edges)
      inst.h_edges = *doc.h_edges;
    else
      map_edges(fresh.h_edges, inst.h_edges);
    return inst;
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("bad instance params: ") + ex.what());
  }
}

// densest family is shaved radius-exact with all-ones strings: k log k input
// edges per side on top of the bit gadget, about (4 log k + 3) / (2 log k + 2)
Rational sparsity_constant() { return Rational(2); }

namespace {

std::int64_t as_int(Distance d) { return static_cast<std::int64_t>(d); }

std::vector<NodeId> ids_of(const Graph& g, Role role, Copy copy = Copy::None) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.n(); ++v)
    if (g.label(v).role() == role && g.label(v).copy() == copy) out.push_back(v);
  return out;
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  for (NodeId v = 0; v < a.n(); ++v)
    if (a.label(v) != b.label(v)) return false;
  for (EdgeIndex e = 0; e < a.edge_count(); ++e) {
    const auto &x = a.edge(e), &y = b.edge(e);
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

// max over i != j of d(from_i, to_j), plus the min, with one BFS per source
std::pair<Distance, Distance> cross_distances(const Graph& g, const std::vector<NodeId>& from,
                                              const std::vector<NodeId>& to) {
  Distance hi = 0, lo = kUnreached;
  std::vector<Distance> d;
  for (std::size_t i = 0; i < from.size(); ++i) {
    raw_distances(g, from[i], d);
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (i == j) continue;
      hi = std::max(hi, d[to[j]]);
      lo = std::min(lo, d[to[j]]);
    }
  }
  return {hi, lo};
}

}  // namespace

Metric headline_metric(const Instance& inst) {
  const Graph& g = inst.graph;
  const auto& m = inst.meta;
  const bool I = inst.intersecting();
  const std::int64_t P = m.P;
  switch (m.construction) {
    case Construction::DiameterExact:
      return {"diameter", as_int(diameter(g)), I ? ">=5" : "<=4"};
    case Construction::DiameterApprox:
      return {"diameter", as_int(diameter(g)), I ? "=" + std::to_string(6 * P + 1) : "<=" + std::to_string(4 * P + 2)};
    case Construction::RadiusExact:
      return {"radius", as_int(radius(g)), I ? "=3" : ">=4"};
    case Construction::RadiusApprox:
      return {"radius", as_int(radius(g)), I ? "=" + std::to_string(4 * P + 1) : ">=" + std::to_string(6 * P + 1)};
    case Construction::Eccentricity: {
      require_connected(g);
      Distance best = kUnreached;
      for (NodeId v : ids_of(g, Role::L)) best = std::min(best, eccentricity(g, v));
      return {"min_L_ecc", as_int(best), I ? "=" + std::to_string(3 * P + 1) : "=" + std::to_string(5 * P + 1)};
    }
    case Construction::RadiusConstDegree: {
      std::int64_t w = log2_exact(m.k), v = log2_exact(static_cast<std::uint64_t>(w));
      std::int64_t T = 2 * v + 2 * w - 1;
      return {"radius", as_int(radius(g)), I ? "<=" + std::to_string(T) : ">=" + std::to_string(T + 1)};
    }
    case Construction::Spanner: {
      auto verdict = verify_spanner(g, inst.h_edges, m.spanner->alpha, m.spanner->beta);
      return {"spanner_ok", verdict.ok ? 1 : 0, I ? "0" : "1"};
    }
  }
  throw std::logic_error("unknown construction");
}

std::vector<CheckResult> verify_instance(const Instance& inst, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const Graph& g = inst.graph;
  const auto& m = inst.meta;
  const bool I = inst.intersecting();
  const std::int64_t P = m.P;
  auto add = [&](std::string name, bool pass, json observed, std::string expected) {
    out.push_back({std::move(name), pass, std::move(observed), std::move(expected)});
  };

  // the file (or caller) really holds this construction
  {
    InstanceConfig cfg{m.construction, {m.k, m.P, m.shaved, std::nullopt}, m.spanner.value_or(SpannerParams{})};
    Instance fresh = build_instance(cfg, inst.input.sa, inst.input.sb);
    bool same = same_graph(fresh.graph, g) && fresh.owner == inst.owner && fresh.cut == inst.cut &&
                (m.construction != Construction::Spanner || fresh.h_edges == inst.h_edges);
    add("matches-construction", same, same, "graph, owners, cut identical to a fresh build");
  }

  std::size_t want_cut = gadgets::expected_cut_size(m.construction, m.k, m.shaved);
  add("cut-size", inst.cut.size() == want_cut, inst.cut.size(), std::to_string(want_cut));

  std::vector<EdgeIndex> crossing;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (inst.owner[g.edge(e).u] != inst.owner[g.edge(e).v]) crossing.push_back(e);
  add("cut-exact", crossing == inst.cut, crossing.size(), "cut = edges with differently owned endpoints");

  std::size_t crossing_inputs = 0;
  for (EdgeIndex e : inst.input_edges)
    if (std::binary_search(crossing.begin(), crossing.end(), e)) ++crossing_inputs;
  add("input-locality", crossing_inputs == 0, crossing_inputs, "0 input edges on the cut");

  const bool padded = m.spanner && m.spanner->clique_pad;
  if (opt.sparsity && !padded) {
    Rational c = sparsity_constant();
    add("sparsity", sparsity_check(g, c), json{{"n", g.n()}, {"edges", g.edge_count()}},
        "edges <= " + to_string(c) + " * n * log2(n)");
  }

  Metric metric = headline_metric(inst);
  const auto obs = metric.observed;
  switch (m.construction) {
    case Construction::DiameterExact:
      add("diameter-iff", (obs >= 5) == I, obs, metric.predicted);
      break;
    case Construction::DiameterApprox:
      add("diameter-gap", I ? obs == 6 * P + 1 : obs <= 4 * P + 2, obs, metric.predicted);
      break;
    case Construction::RadiusExact:
      add("radius-iff", I ? obs == 3 : obs >= 4, obs, metric.predicted);
      break;
    case Construction::RadiusApprox: {
      add("radius-gap", I ? obs == 4 * P + 1 : obs >= 6 * P + 1, obs, metric.predicted);
      auto ecc = all_eccentricities(g);
      Distance best_lp = kUnreached;
      for (NodeId v : ids_of(g, Role::LPrime)) best_lp = std::min(best_lp, ecc[v]);
      add("argmin-in-L'", as_int(best_lp) == obs, as_int(best_lp), "min eccentricity over L' equals the radius");
      break;
    }
    case Construction::Eccentricity: {
      if (I) {
        add("eccentricity-gap", obs == 3 * P + 1, obs, metric.predicted);
      } else {
        bool all = true;
        json seen = json::array();
        for (NodeId v : ids_of(g, Role::L)) {
          auto e = as_int(eccentricity(g, v));
          seen.push_back(e);
          all = all && e == 5 * P + 1;
        }
        add("eccentricity-gap", all, seen, "every l in L has eccentricity " + std::to_string(5 * P + 1));
      }
      break;
    }
    case Construction::RadiusConstDegree: {
      std::int64_t w = log2_exact(m.k), v = log2_exact(static_cast<std::uint64_t>(w));
      std::int64_t T = 2 * v + 2 * w - 1;
      add("radius-iff", I ? obs <= T : obs >= T + 1, obs, metric.predicted);
      // only an l_i that keeps its q-edge reaches 5 (r_i is not under x1's tree)
      auto md = max_degree(g);
      ConstructionParams cp{m.k, m.P, m.shaved, std::nullopt};
      BitInput full{Bits(inst.input.sa.size(), true), Bits(inst.input.sb.size(), true), inst.input.polarity};
      auto md_full = max_degree(gadgets::build(m.construction, cp, full).graph);
      const bool any_a = std::find(inst.input.sa.begin(), inst.input.sa.end(), true) != inst.input.sa.end();
      const std::size_t want = any_a ? 5 : 4;
      add("max-degree", md == want && md_full == 5, json{{"instance", md}, {"all_edges_present", md_full}},
          std::to_string(want) + " (5 unless Alice's string is all zeros), 5 with every input edge present");
      break;
    }
    case Construction::Spanner:
      add("spanner-iff", (obs == 1) == !I, obs, metric.predicted);
      break;
  }

  if (opt.structural) {
    // distance facts are about the graph before any input edge is added;
    // with input edges a pair can only get closer
    GraphBuilder nb = GraphBuilder::from(inst.graph);
    for (EdgeIndex e : inst.input_edges) nb.remove_edge(g.label(g.edge(e).u), g.label(g.edge(e).v));
    const Graph base = nb.build();
    const Graph& g = base;
    switch (m.construction) {
      case Construction::DiameterExact: {
        auto [hi, lo] = cross_distances(g, ids_of(g, Role::L), ids_of(g, Role::R));
        add("d(l_i,r_j)=3", hi == 3 && lo == 3, json{{"min", lo}, {"max", hi}}, "3 for every i != j");
        break;
      }
      case Construction::DiameterApprox: {
        auto [hi, lo] = cross_distances(g, ids_of(g, Role::LPrime), ids_of(g, Role::RPrime));
        add("d(l'_i,r'_j)=4P+1", as_int(hi) == 4 * P + 1 && as_int(lo) == 4 * P + 1, json{{"min", lo}, {"max", hi}},
            std::to_string(4 * P + 1) + " for every i != j");
        break;
      }
      case Construction::RadiusConstDegree: {
        std::int64_t w = log2_exact(m.k), v = log2_exact(static_cast<std::uint64_t>(w));
        auto [hi, lo] = cross_distances(g, ids_of(g, Role::L), ids_of(g, Role::R));
        add("d(l_i,r_j)<=2loglogk+2logk-1", as_int(hi) <= 2 * v + 2 * w - 1, json{{"max", hi}},
            "<= " + std::to_string(2 * v + 2 * w - 1));
        break;
      }
      default:
        break;
    }
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

json checks_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"check", c.name}, {"pass", c.pass}, {"observed", c.observed}, {"expected", c.expected}});
  return arr;
}

std::vector<InputCase> input_cases(std::size_t length, bool exhaustive, std::size_t trials, std::uint64_t seed,
                                   double density) {
  std::vector<InputCase> out;
  std::mt19937_64 rng(seed);
  out.push_back({"all-zeros", Bits(length, false), Bits(length, false)});
  out.push_back({"all-ones", Bits(length, true), Bits(length, true)});
  {
    Bits one(length, false);
    one[std::uniform_int_distribution<std::size_t>(0, length - 1)(rng)] = true;
    out.push_back({"single-shared-bit", one, one});
  }
  if (exhaustive) {
    if (length > 12) throw PreconditionError("exhaustive enumeration needs input length <= 12");
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t a = 0; a < total; ++a)
      for (std::uint64_t b = 0; b < total; ++b) {
        Bits sa(length), sb(length);
        for (std::size_t i = 0; i < length; ++i) {
          sa[i] = (a >> i) & 1;
          sb[i] = (b >> i) & 1;
        }
        out.push_back({"exhaustive", std::move(sa), std::move(sb)});
      }
    return out;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Bits sa = random_bits(length, density, rng);
    Bits sb = random_bits(length, density, rng);
    out.push_back({"random", std::move(sa), std::move(sb)});
  }
  return out;
}

}  // namespace congestlb
