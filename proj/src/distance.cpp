#include "congestlb/distance.hpp"
#include "congestlb/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>

namespace congestlb {

Distance DistanceReport::at(NodeId v) const {
  const auto& d = dist.at(v);
  if (!d) throw std::out_of_range("node " + std::to_string(v) + " unreachable from " + std::to_string(source));
  return *d;
}

namespace {

void bfs_raw(const Graph& g, NodeId s, std::vector<Distance>& d, std::vector<NodeId>& queue) {
  d.assign(g.n(), kUnreached);
  queue.resize(g.n());
  std::size_t head = 0, tail = 0;
  d[s] = 0;
  queue[tail++] = s;
  while (head < tail) {
    NodeId u = queue[head++];
    for (const auto& nb : g.neighbors(u)) {
      if (d[nb.node] == kUnreached) {
        d[nb.node] = d[u] + 1;
        queue[tail++] = nb.node;
      }
    }
  }
}

void dijkstra_raw(const Graph& g, NodeId s, std::vector<Distance>& d) {
  d.assign(g.n(), kUnreached);
  using Item = std::pair<Distance, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du > d[u]) continue;
    for (const auto& nb : g.neighbors(u)) {
      Distance cand = du + nb.w;
      if (cand < d[nb.node]) {
        d[nb.node] = cand;
        pq.push({cand, nb.node});
      }
    }
  }
}

DistanceReport to_report(NodeId s, const std::vector<Distance>& raw) {
  DistanceReport r;
  r.source = s;
  r.dist.resize(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v)
    if (raw[v] != kUnreached) r.dist[v] = raw[v];
  return r;
}

[[noreturn]] void throw_disconnected(const Graph& g, NodeId a, NodeId b) {
  throw DisconnectedGraphError(a, b,
                               "graph is disconnected: " + g.label(a).str() + " (id " + std::to_string(a) +
                                   ") cannot reach " + g.label(b).str() + " (id " + std::to_string(b) + ")");
}

// Runs fn(source, scratch) for every source, split over hardware threads.
template <typename Fn>
void for_each_source(const Graph& g, Fn&& fn) {
  const std::size_t n = g.n();
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (n < 256) workers = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::vector<Distance> d;
    std::vector<NodeId> q;
    for (std::size_t s; (s = next.fetch_add(1)) < n;) fn(static_cast<NodeId>(s), d, q);
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

Distance max_finite(const Graph& g, NodeId s, const std::vector<Distance>& d) {
  Distance best = 0;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] == kUnreached) throw_disconnected(g, s, static_cast<NodeId>(v));
    best = std::max(best, d[v]);
  }
  return best;
}

}  // namespace

void raw_distances(const Graph& g, NodeId source, std::vector<Distance>& out) {
  g.check_node(source);
  if (g.weighted()) {
    dijkstra_raw(g, source, out);
  } else {
    std::vector<NodeId> q;
    bfs_raw(g, source, out, q);
  }
}

DistanceReport bfs_distances(const Graph& g, NodeId source) {
  g.check_node(source);
  if (g.weighted()) throw PreconditionError("bfs_distances needs an unweighted graph");
  std::vector<Distance> d;
  std::vector<NodeId> q;
  bfs_raw(g, source, d, q);
  return to_report(source, d);
}

DistanceReport dijkstra_distances(const Graph& g, NodeId source) {
  g.check_node(source);
  for (const auto& e : g.edges())
    if (e.w < 1) throw PreconditionError("nonpositive weight on edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  std::vector<Distance> d;
  dijkstra_raw(g, source, d);
  return to_report(source, d);
}

DistanceReport shortest_paths(const Graph& g, NodeId source) {
  return g.weighted() ? dijkstra_distances(g, source) : bfs_distances(g, source);
}

void require_connected(const Graph& g) {
  if (g.n() == 0) return;
  std::vector<Distance> d;
  raw_distances(g, 0, d);
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] == kUnreached) throw_disconnected(g, 0, static_cast<NodeId>(v));
}

Distance eccentricity(const Graph& g, NodeId u) {
  std::vector<Distance> d;
  raw_distances(g, u, d);
  return max_finite(g, u, d);
}

std::vector<Distance> all_eccentricities(const Graph& g) {
  require_connected(g);
  std::vector<Distance> ecc(g.n(), 0);
  for_each_source(g, [&](NodeId s, std::vector<Distance>& d, std::vector<NodeId>& q) {
    if (g.weighted())
      dijkstra_raw(g, s, d);
    else
      bfs_raw(g, s, d, q);
    ecc[s] = *std::max_element(d.begin(), d.end());
  });
  return ecc;
}

Distance diameter(const Graph& g) {
  if (g.n() == 0) throw PreconditionError("diameter of the empty graph");
  auto ecc = all_eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

namespace {

// BFS that gives up once the frontier passes `limit`; returns the
// eccentricity, or kUnreached when it exceeds the limit.
Distance bounded_ecc(const Graph& g, NodeId s, Distance limit, std::vector<Distance>& d, std::vector<NodeId>& q) {
  d.assign(g.n(), kUnreached);
  q.resize(g.n());
  std::size_t head = 0, tail = 0;
  d[s] = 0;
  q[tail++] = s;
  Distance far = 0;
  while (head < tail) {
    NodeId u = q[head++];
    far = d[u];
    if (far > limit) return kUnreached;
    for (const auto& nb : g.neighbors(u)) {
      if (d[nb.node] == kUnreached) {
        d[nb.node] = d[u] + 1;
        q[tail++] = nb.node;
      }
    }
  }
  return far;
}

}  // namespace

Distance radius(const Graph& g) {
  if (g.n() == 0) throw PreconditionError("radius of the empty graph");
  require_connected(g);
  if (g.weighted()) {
    auto ecc = all_eccentricities(g);
    return *std::min_element(ecc.begin(), ecc.end());
  }
  std::atomic<Distance> best{kUnreached};
  for_each_source(g, [&](NodeId s, std::vector<Distance>& d, std::vector<NodeId>& q) {
    Distance limit = best.load();
    Distance e = bounded_ecc(g, s, limit == kUnreached ? kUnreached - 1 : limit, d, q);
    if (e == kUnreached) return;
    Distance cur = best.load();
    while (e < cur && !best.compare_exchange_weak(cur, e)) {
    }
  });
  return best.load();
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (NodeId v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t edge_count(const Graph& g) { return g.edge_count(); }

bool sparsity_check(const Graph& g, const Rational& c) {
  const long double n = static_cast<long double>(g.n());
  if (g.n() <= 1) return g.edge_count() == 0;
  const long double bound = static_cast<long double>(c.numerator()) / static_cast<long double>(c.denominator()) * n *
                            std::log2(n);
  return static_cast<long double>(g.edge_count()) <= bound;
}

}  // namespace congestlb
