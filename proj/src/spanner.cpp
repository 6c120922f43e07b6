#include "congestlb/spanner.hpp"
#include "congestlb/errors.hpp"
#include "congestlb/gadgets.hpp"

#include <algorithm>
#include <string>

namespace congestlb {

namespace {

using NL = NodeLabel;

int I(unsigned v) { return static_cast<int>(v); }

}  // namespace

SpannerInstance build_spanner_instance(const SpannerParams& params, unsigned k, const BitInput& input) {
  if (params.alpha < 1) throw PreconditionError("alpha must be >= 1 (got " + to_string(params.alpha) + ")");
  if (params.beta < 0) throw PreconditionError("beta must be >= 0 (got " + to_string(params.beta) + ")");
  if (params.x < 1) throw PreconditionError("x must be a positive integer");
  if (!params.weighted && params.x != 1)
    throw PreconditionError("unweighted spanner instances need x = 1 (an input path of length x >= 2 would strand its "
                            "interior in H)");
  const unsigned P = params.path_length();
  if (k < 4) throw PreconditionError("k must be a power of two >= 4");
  const unsigned w = log2_exact(k);
  if (input.polarity != Polarity::EdgeOnOne) throw PreconditionError("spanner uses polarity EdgeOnOne");
  if (input.sa.size() != k || input.sb.size() != k)
    throw PreconditionError("input strings must have length " + std::to_string(k));
  if (params.clique_pad) {
    if (*params.clique_pad < 2) throw PreconditionError("clique padding needs at least 2 nodes");
    if (params.alpha + params.beta < 2)
      throw PreconditionError("clique padding needs alpha + beta >= 2 so the padded star spans the clique");
  }

  InstanceMeta meta;
  meta.construction = Construction::Spanner;
  meta.k = k;
  meta.P = P;
  meta.spanner = params;
  InstanceAssembler as(meta, input, params.weighted);
  auto& b = as.builder();
  if (params.alpha >= params.beta + 1)
    as.warn("alpha >= beta + 1: the intersecting direction of the lower bound is vacuous for these parameters");

  const int half = I(P / 2);
  auto connect = [&](const NL& u, const NL& v, int len) {
    if (params.weighted)
      b.add_edge(u, v, len);
    else
      b.add_path(u, v, len);
  };
  const NL lk1 = NL::hub_l(1), rk1 = NL::hub_r(1), lk2 = NL::hub_l(2), rk2 = NL::hub_r(2);
  for (unsigned i = 0; i < k; ++i) {
    const NL li = NL::l(I(i)), ri = NL::r(I(i));
    for (unsigned j = 0; j < w; ++j) {
      connect(li, bit_of(i, j) ? NL::t(I(j)) : NL::f(I(j)), half);
      connect(ri, bit_of(i, j) ? NL::t_prime(I(j)) : NL::f_prime(I(j)), half);
    }
    if (params.weighted) {
      // the input edge joins the same endpoints, so the structural one detours through a midpoint
      b.add_edge(li, NL::path(li, lk1, 0, 1), half);
      b.add_edge(NL::path(li, lk1, 0, 1), lk1, half);
      b.add_edge(ri, NL::path(ri, rk1, 0, 1), half);
      b.add_edge(NL::path(ri, rk1, 0, 1), rk1, half);
    } else {
      b.add_path(li, lk1, I(P));
      b.add_path(ri, rk1, I(P));
    }
    connect(lk2, li, half);
    connect(rk2, ri, half);
  }
  b.add_edge(lk1, rk1);
  for (unsigned j = 0; j < w; ++j) {
    b.add_edge(NL::f(I(j)), NL::t_prime(I(j)));
    b.add_edge(NL::t(I(j)), NL::f_prime(I(j)));
  }
  for (unsigned i = 0; i < k; ++i) {
    if (params.weighted) {
      if (input.sa[i]) as.add_input_edge(NL::l(I(i)), lk1, params.x);
      if (input.sb[i]) as.add_input_edge(NL::r(I(i)), rk1, params.x);
    } else {
      if (input.sa[i]) as.add_input_path(NL::l(I(i)), lk1, I(params.x), 1);
      if (input.sb[i]) as.add_input_path(NL::r(I(i)), rk1, I(params.x), 1);
    }
  }
  if (params.clique_pad) {
    const int m = I(*params.clique_pad);
    for (int a = 0; a < m; ++a)
      for (int c = a + 1; c < m; ++c) b.add_edge(NL::clique_pad(a), NL::clique_pad(c));
    b.add_edge(lk1, NL::clique_pad(0));
  }

  SpannerInstance inst = as.finish();
  const Graph& g = inst.graph;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (std::binary_search(inst.input_edges.begin(), inst.input_edges.end(), e)) continue;
    const auto& lu = g.label(g.edge(e).u);
    const auto& lv = g.label(g.edge(e).v);
    // inside the padding clique only the star from c0 is kept
    if (lu.role() == Role::CliquePad && lv.role() == Role::CliquePad && lu.index() != 0 && lv.index() != 0) continue;
    inst.h_edges.push_back(e);
  }
  return inst;
}

Graph subgraph(const Graph& g, const std::vector<EdgeIndex>& h) {
  GraphBuilder b(g.weighted());
  for (const auto& l : g.labels()) b.add_node(l);
  for (EdgeIndex e : h) {
    if (e >= g.edge_count()) throw PreconditionError("edge index " + std::to_string(e) + " is not an edge of G");
    const Edge& ed = g.edge(e);
    if (b.has_edge(g.label(ed.u), g.label(ed.v))) throw PreconditionError("edge " + std::to_string(e) + " listed twice in H");
    b.add_edge(g.label(ed.u), g.label(ed.v), static_cast<std::int64_t>(ed.w));
  }
  return b.build();
}

SpannerVerdict verify_spanner(const Graph& g, const std::vector<EdgeIndex>& h, const Rational& alpha,
                              const Rational& beta) {
  Graph hg = subgraph(g, h);
  require_connected(g);
  std::vector<Distance> dg, dh;
  for (NodeId u = 0; u < g.n(); ++u) {
    raw_distances(g, u, dg);
    raw_distances(hg, u, dh);
    for (NodeId v = u + 1; v < g.n(); ++v) {
      bool bad = dh[v] == kUnreached ||
                 Rational(static_cast<std::int64_t>(dh[v])) > alpha * Rational(static_cast<std::int64_t>(dg[v])) + beta;
      if (!bad) continue;
      SpannerVerdict verdict;
      verdict.ok = false;
      SpannerWitness wit{u, v, dg[v], std::nullopt};
      if (dh[v] != kUnreached) wit.d_h = dh[v];
      verdict.witness = wit;
      return verdict;
    }
  }
  return {};
}

}  // namespace congestlb
