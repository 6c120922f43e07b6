#include "congestlb/programs.hpp"
#include "congestlb/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace congestlb {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

void broadcast(Mailbox& out, const Bits& msg) {
  for (auto& slot : out) slot = msg;
}

// ---- bfs_layers

class BfsProcess : public NodeProcess {
 public:
  BfsProcess(bool source) : source_(source) {}
  std::optional<NodeOutput> on_round(std::size_t round, const Mailbox& inbox, Mailbox& out) override {
    if (dist_) return NodeOutput{{"dist", *dist_}};
    bool heard = std::any_of(inbox.begin(), inbox.end(), [](const auto& m) { return m.has_value(); });
    if (!(source_ && round == 0) && !heard) return std::nullopt;
    dist_ = static_cast<std::int64_t>(round);
    for (std::size_t p = 0; p < out.size(); ++p)
      if (!inbox[p]) out[p] = Bits{true};
    return NodeOutput{{"dist", *dist_}};
  }

 private:
  bool source_;
  std::optional<std::int64_t> dist_;
};

class BfsLayers : public NodeProgram {
 public:
  explicit BfsLayers(NodeId s) : source_(s) {}
  std::string name() const override { return "bfs-layers"; }
  std::unique_ptr<NodeProcess> init(const LocalView& view, const PublicParams& p) const override {
    if (source_ >= p.n) throw PreconditionError("bfs source out of range");
    return std::make_unique<BfsProcess>(view.id == source_);
  }

 private:
  NodeId source_;
};

// ---- flood_max

class FloodMaxProcess : public NodeProcess {
 public:
  FloodMaxProcess(std::uint64_t value, unsigned width, std::size_t deadline)
      : cur_(value), width_(width), deadline_(deadline) {}
  std::optional<NodeOutput> on_round(std::size_t round, const Mailbox& inbox, Mailbox& out) override {
    bool changed = round == 0;
    for (const auto& m : inbox) {
      if (!m) continue;
      std::size_t pos = 0;
      auto v = read_uint(*m, pos, width_);
      if (v > cur_) {
        cur_ = v;
        changed = true;
      }
    }
    if (round >= deadline_) return NodeOutput{{"max", static_cast<std::int64_t>(cur_)}};
    if (changed) {
      Bits msg;
      append_uint(msg, cur_, width_);
      broadcast(out, msg);
    }
    return std::nullopt;
  }

 private:
  std::uint64_t cur_;
  unsigned width_;
  std::size_t deadline_;
};

class FloodMax : public NodeProgram {
 public:
  FloodMax(std::vector<std::uint64_t> initial, unsigned bits) : initial_(std::move(initial)), bits_(bits) {}
  std::string name() const override { return "flood-max"; }
  unsigned width(const PublicParams& p) const { return bits_ ? bits_ : bits_for(p.n == 0 ? 0 : p.n - 1); }
  std::size_t min_message_bits(const PublicParams& p) const override { return width(p); }
  std::unique_ptr<NodeProcess> init(const LocalView& view, const PublicParams& p) const override {
    unsigned w = width(p);
    if (p.b < w) throw ProtocolViolation(view.id, 0, "b = " + std::to_string(p.b) + " cannot carry a " + std::to_string(w) + "-bit value");
    std::uint64_t v = initial_.empty() ? view.id : initial_.at(view.id);
    std::size_t deadline = p.n == 0 ? 0 : p.n - 1;
    if (auto it = p.values.find("round_bound"); it != p.values.end()) deadline = static_cast<std::size_t>(it->second);
    return std::make_unique<FloodMaxProcess>(v, w, deadline);
  }

 private:
  std::vector<std::uint64_t> initial_;
  unsigned bits_;
};

// ---- pipelined APSP

struct TokenFormat {
  unsigned id_bits;
  unsigned dist_bits;
  std::uint64_t max_dist;

  explicit TokenFormat(const PublicParams& p)
      : id_bits(bits_for(p.n == 0 ? 0 : p.n - 1)),
        dist_bits(bits_for((p.n == 0 ? 0 : p.n - 1) * p.max_weight)),
        max_dist((p.n == 0 ? 0 : p.n - 1) * p.max_weight) {}
  unsigned bits() const { return id_bits + dist_bits; }
};

// Distance table of one node plus its queue of unsent improvements.
class ApspTable {
 public:
  ApspTable(NodeId self, std::size_t n) : best_(n, kNone) { offer(self, 0); }

  void offer(NodeId src, std::uint64_t d) {
    if (d >= best_[src]) return;
    if (best_[src] != kNone) queue_.erase({best_[src], src});
    best_[src] = d;
    queue_.insert({d, src});
  }
  // smallest unsent entry whose distance has been "released" by round `now`
  std::optional<std::pair<std::uint64_t, NodeId>> take(std::uint64_t now) {
    if (queue_.empty() || queue_.begin()->first > now) return std::nullopt;
    auto e = *queue_.begin();
    queue_.erase(queue_.begin());
    return e;
  }
  const std::vector<std::uint64_t>& best() const { return best_; }

 private:
  std::vector<std::uint64_t> best_;
  std::set<std::pair<std::uint64_t, NodeId>> queue_;
};

Bits encode_token(const TokenFormat& f, std::uint64_t d, NodeId src) {
  Bits m;
  append_uint(m, src, f.id_bits);
  append_uint(m, d, f.dist_bits);
  return m;
}

void absorb_tokens(const TokenFormat& f, const Mailbox& inbox, const std::vector<Weight>& w, ApspTable& t) {
  for (std::size_t p = 0; p < inbox.size(); ++p) {
    if (!inbox[p]) continue;
    std::size_t pos = 0;
    auto src = static_cast<NodeId>(read_uint(*inbox[p], pos, f.id_bits));
    auto d = read_uint(*inbox[p], pos, f.dist_bits);
    t.offer(src, d + w[p]);
  }
}

}  // namespace

std::size_t apsp_phase_rounds(const PublicParams& p) {
  std::size_t r = 2 * p.n;
  if (p.max_weight > 1) r += (p.n == 0 ? 0 : p.n - 1) * p.max_weight;
  return r;
}

namespace {

class ApspProcess : public NodeProcess {
 public:
  ApspProcess(const LocalView& view, const PublicParams& p)
      : fmt_(p), w_(view.port_weights), table_(view.id, p.n), n_(p.n), A_(apsp_phase_rounds(p)),
        watched_(std::find(p.watch.begin(), p.watch.end(), view.id) != p.watch.end()),
        has_watch_(!p.watch.empty()),
        value_bits_(bits_for(fmt_.max_dist + 1)) {}

  std::optional<NodeOutput> on_round(std::size_t r, const Mailbox& inbox, Mailbox& out) override {
    const std::size_t F = A_ + 3 * n_;
    if (r > F) return output_;
    if (r >= 1) {
      if (r - 1 < A_) {
        absorb_tokens(fmt_, inbox, w_, table_);
      } else {
        std::size_t sub = (r - 1 - A_) / n_;
        for (const auto& m : inbox) {
          if (!m) continue;
          std::size_t pos = 0;
          auto v = read_uint(*m, pos, value_bits_);
          auto& cur = agg_[sub];
          auto next = sub == 0 ? std::max(cur, v) : std::min(cur, v);
          if (next != cur) {
            cur = next;
            changed_ = true;
          }
        }
      }
    }
    if (r == A_) {
      std::uint64_t ecc = 0;
      for (auto d : table_.best()) ecc = std::max(ecc, d == kNone ? fmt_.max_dist + 1 : d);
      ecc_ = ecc;
      agg_ = {ecc, ecc, watched_ ? ecc : fmt_.max_dist + 1};
    }
    if (r < A_) {
      if (auto tok = table_.take(r)) broadcast(out, encode_token(fmt_, tok->first, tok->second));
    } else if (r < F) {
      std::size_t sub = (r - A_) / n_;
      if (r == A_ + sub * n_ || changed_) {
        Bits m;
        append_uint(m, agg_[sub], value_bits_);
        broadcast(out, m);
      }
    } else {
      NodeOutput o{{"ecc", static_cast<std::int64_t>(ecc_)},
                   {"diameter", static_cast<std::int64_t>(agg_[0])},
                   {"radius", static_cast<std::int64_t>(agg_[1])}};
      if (has_watch_) o["watch_min_ecc"] = static_cast<std::int64_t>(agg_[2]);
      output_ = o;
    }
    changed_ = false;
    return output_;
  }

 private:
  TokenFormat fmt_;
  std::vector<Weight> w_;
  ApspTable table_;
  std::size_t n_;
  std::size_t A_;
  bool watched_;
  bool has_watch_;
  unsigned value_bits_;
  std::uint64_t ecc_ = 0;
  std::array<std::uint64_t, 3> agg_{};
  bool changed_ = false;
  std::optional<NodeOutput> output_;
};

class ApspDiameter : public NodeProgram {
 public:
  std::string name() const override { return "apsp-diameter"; }
  std::size_t min_message_bits(const PublicParams& p) const override { return TokenFormat(p).bits(); }
  std::unique_ptr<NodeProcess> init(const LocalView& view, const PublicParams& p) const override {
    TokenFormat f(p);
    if (p.b < f.bits())
      throw ProtocolViolation(view.id, 0,
                              "b = " + std::to_string(p.b) + " cannot carry a " + std::to_string(f.bits()) + "-bit token");
    return std::make_unique<ApspProcess>(view, p);
  }
};

// ---- spanner check

class SpannerProcess : public NodeProcess {
 public:
  SpannerProcess(const LocalView& view, const PublicParams& p, Rational alpha, Rational beta)
      : fmt_(p), w_(view.port_weights), h_(view.port_flags), g_table_(view.id, p.n), h_table_(view.id, p.n),
        n_(p.n), A_(2 * apsp_phase_rounds(p)), alpha_(alpha), beta_(beta) {}

  std::optional<NodeOutput> on_round(std::size_t r, const Mailbox& inbox, Mailbox& out) override {
    const std::size_t F = A_ + n_;
    if (r > F) return output_;
    if (r >= 1) {
      if (r - 1 < A_) {
        absorb_tokens(fmt_, inbox, w_, (r - 1) % 2 == 0 ? g_table_ : h_table_);
      } else {
        for (const auto& m : inbox)
          if (m && ok_) {
            ok_ = false;
            changed_ = true;
          }
      }
    }
    if (r == A_) {
      const auto& dg = g_table_.best();
      const auto& dh = h_table_.best();
      for (std::size_t v = 0; v < n_; ++v) {
        if (dh[v] == kNone || (dg[v] != kNone && Rational(static_cast<std::int64_t>(dh[v])) >
                                                     alpha_ * Rational(static_cast<std::int64_t>(dg[v])) + beta_))
          ok_ = false;
      }
      changed_ = !ok_;
    }
    if (r < A_) {
      const bool g_round = r % 2 == 0;
      auto& t = g_round ? g_table_ : h_table_;
      if (auto tok = t.take(r / 2)) {
        Bits m = encode_token(fmt_, tok->first, tok->second);
        for (std::size_t p = 0; p < out.size(); ++p)
          if (g_round || h_[p]) out[p] = m;
      }
    } else if (r < F) {
      if (changed_) broadcast(out, Bits{false});
    } else {
      output_ = NodeOutput{{"ok", ok_ ? 1 : 0}};
    }
    changed_ = false;
    return output_;
  }

 private:
  TokenFormat fmt_;
  std::vector<Weight> w_;
  std::vector<bool> h_;
  ApspTable g_table_;
  ApspTable h_table_;
  std::size_t n_;
  std::size_t A_;
  Rational alpha_;
  Rational beta_;
  bool ok_ = true;
  bool changed_ = false;
  std::optional<NodeOutput> output_;
};

class SpannerCheck : public NodeProgram {
 public:
  SpannerCheck(Rational a, Rational b) : alpha_(a), beta_(b) {}
  std::string name() const override { return "spanner-check"; }
  std::size_t min_message_bits(const PublicParams& p) const override { return TokenFormat(p).bits(); }
  std::unique_ptr<NodeProcess> init(const LocalView& view, const PublicParams& p) const override {
    TokenFormat f(p);
    if (p.b < f.bits())
      throw ProtocolViolation(view.id, 0,
                              "b = " + std::to_string(p.b) + " cannot carry a " + std::to_string(f.bits()) + "-bit token");
    return std::make_unique<SpannerProcess>(view, p, alpha_, beta_);
  }

 private:
  Rational alpha_;
  Rational beta_;
};

}  // namespace

std::unique_ptr<NodeProgram> bfs_layers(NodeId source) { return std::make_unique<BfsLayers>(source); }

std::unique_ptr<NodeProgram> flood_max(std::vector<std::uint64_t> initial, unsigned value_bits) {
  return std::make_unique<FloodMax>(std::move(initial), value_bits);
}

std::unique_ptr<NodeProgram> apsp_diameter() { return std::make_unique<ApspDiameter>(); }

std::unique_ptr<NodeProgram> spanner_check(const Rational& alpha, const Rational& beta) {
  return std::make_unique<SpannerCheck>(alpha, beta);
}

}  // namespace congestlb
