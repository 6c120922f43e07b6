#pragma once

#include "congestlb/bits.hpp"
#include "congestlb/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace congestlb {

// What a node may know about itself.
struct LocalView {
  NodeId id = 0;
  std::size_t degree = 0;
  std::vector<Weight> port_weights;  // ports in neighbour-id order
  std::vector<bool> port_flags;      // per-port local input (e.g. "this edge is in H")
  std::uint64_t rng_seed = 0;

  std::mt19937_64 rng() const { return std::mt19937_64(rng_seed); }
};

// Public knowledge shared by every node.
struct PublicParams {
  std::size_t n = 0;
  std::size_t b = 0;
  Weight max_weight = 1;
  std::vector<NodeId> watch;                    // e.g. the ids of L
  std::map<std::string, std::int64_t> values;  // construction parameters, round bounds
};

using NodeOutput = std::map<std::string, std::int64_t>;
using Mailbox = std::vector<std::optional<Bits>>;  // one slot per port

class NodeProcess {
 public:
  virtual ~NodeProcess() = default;
  // Round 0 gets an empty inbox. `outbox` arrives sized to the degree and empty.
  virtual std::optional<NodeOutput> on_round(std::size_t round, const Mailbox& inbox, Mailbox& outbox) = 0;
};

class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<NodeProcess> init(const LocalView& view, const PublicParams& params) const = 0;
  // smallest b the program can live with; used only to pick a default b
  virtual std::size_t min_message_bits(const PublicParams&) const { return 1; }
};

// Bit packing helpers for programs.
void append_uint(Bits& out, std::uint64_t value, unsigned width);
std::uint64_t read_uint(const Bits& in, std::size_t& pos, unsigned width);
unsigned bits_for(std::uint64_t max_value);  // width that can hold 0..max_value, at least 1

struct LedgerEntry {
  std::size_t round;  // delivery round
  EdgeIndex edge;
  std::uint64_t bits;  // both directions
};

class TrafficLedger {
 public:
  void record(std::size_t round, EdgeIndex edge, std::uint64_t bits);

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  const std::map<EdgeIndex, std::uint64_t>& per_edge() const { return per_edge_; }
  const std::map<std::size_t, std::uint64_t>& per_round() const { return per_round_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t bits_on(const std::vector<EdgeIndex>& edges) const;

  std::string to_csv(const Graph& g) const;
  friend bool operator==(const TrafficLedger&, const TrafficLedger&);

 private:
  std::vector<LedgerEntry> entries_;
  std::map<std::pair<std::size_t, EdgeIndex>, std::size_t> slot_;
  std::map<EdgeIndex, std::uint64_t> per_edge_;
  std::map<std::size_t, std::uint64_t> per_round_;
  std::uint64_t total_ = 0;
};

struct RunConfig {
  std::optional<std::size_t> b;  // default: max(2*ceil(log2 n)+2, program minimum)
  std::size_t max_rounds = 1'000'000;
  std::uint64_t seed = 0;
  std::vector<NodeId> watch;
  std::map<std::string, std::int64_t> values;
  std::vector<bool> edge_flags;  // per edge index; empty = all false
};

struct RunOutcome {
  std::size_t rounds_used = 0;
  bool terminated = false;
  std::size_t b = 0;
  std::vector<std::optional<NodeOutput>> outputs;
  std::vector<std::size_t> output_round;
  TrafficLedger ledger;
};

std::size_t default_b(std::size_t n);
PublicParams make_public_params(const Graph& g, const NodeProgram& prog, const RunConfig& cfg);

RunOutcome run(const Graph& g, const NodeProgram& prog, const RunConfig& cfg = {});

nlohmann::json outcome_json(const Graph& g, const RunOutcome& out, const std::vector<EdgeIndex>* cut = nullptr);

namespace detail {

struct Emission {
  NodeId from;
  NodeId to;
  EdgeIndex edge;
  std::size_t to_port;
  Bits msg;
};

// Runs the processes of a subset of nodes; shared by run() and the two-party harness.
class NodeGroup {
 public:
  NodeGroup(const Graph& g, const NodeProgram& prog, const PublicParams& params, const std::vector<bool>& edge_flags,
            std::uint64_t seed, std::vector<NodeId> members);

  void deliver(const Emission& e);
  std::vector<Emission> step(std::size_t round);
  bool all_output() const;
  bool owns(NodeId v) const { return member_[v]; }

  const std::vector<std::optional<NodeOutput>>& outputs() const { return outputs_; }
  const std::vector<std::size_t>& output_round() const { return output_round_; }

 private:
  const Graph& g_;
  std::size_t b_;
  std::vector<NodeId> members_;
  std::vector<bool> member_;
  std::vector<std::unique_ptr<NodeProcess>> procs_;  // by global id
  std::vector<Mailbox> inbox_;
  std::vector<std::optional<NodeOutput>> outputs_;
  std::vector<std::size_t> output_round_;
};

}  // namespace detail

}  // namespace congestlb
