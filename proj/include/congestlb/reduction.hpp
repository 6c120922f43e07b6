#pragma once

#include "congestlb/congest.hpp"
#include "congestlb/instance.hpp"

#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace congestlb {

enum class Answer { Disjoint, Intersecting };
std::string_view answer_name(Answer a);

struct DisjointnessInstance {
  Bits sa;
  Bits sb;
  std::size_t k_bits() const { return sa.size(); }
};

Answer ground_truth(const DisjointnessInstance& d);

struct DecisionRule {
  std::string description;
  // nullopt: the output does not determine an answer
  std::function<std::optional<Answer>(const NodeOutput&)> decide;
};

struct RoundTraffic {
  std::size_t round;  // round in which the bits cross the cut
  std::uint64_t a_to_b = 0;
  std::uint64_t b_to_a = 0;
  std::uint64_t framing_a_to_b = 0;
  std::uint64_t framing_b_to_a = 0;
};

struct Transcript {
  std::uint64_t bits_a_to_b = 0;  // payload only
  std::uint64_t bits_b_to_a = 0;
  std::uint64_t framing_a_to_b = 0;
  std::uint64_t framing_b_to_a = 0;
  std::vector<RoundTraffic> per_round;
  std::size_t rounds = 0;
  std::size_t b = 0;
  bool terminated = false;
  Answer answer = Answer::Disjoint;
  std::vector<std::optional<NodeOutput>> outputs;
  std::vector<std::size_t> output_round;

  std::uint64_t payload_bits() const { return bits_a_to_b + bits_b_to_a; }
  std::uint64_t framed_bits() const { return payload_bits() + framing_a_to_b + framing_b_to_a; }
};

// Alice runs the Alice-owned nodes, Bob the rest. Cut messages travel as one
// bit stream per direction per round: for every message a 1 bit, the cut
// position (ceil(log2 |cut|) bits), the length (ceil(log2(b+1)) bits) and the
// payload; then a 0 bit and one status bit ("my side is done and silent").
Transcript simulate_two_party(const Instance& inst, const NodeProgram& prog, const RunConfig& cfg,
                              const DecisionRule& decision);

// ceil(c_disj * k_bits / (cut_size * 2b))
std::uint64_t implied_round_lower_bound(std::uint64_t k_bits, std::uint64_t cut_size, std::uint64_t b,
                                        const Rational& c_disj);

// The construction's threshold on the matching program's output.
DecisionRule reference_decision(const InstanceMeta& meta);
std::unique_ptr<NodeProgram> reference_program(const Instance& inst);
// watch set / H flags the reference program needs
RunConfig reference_config(const Instance& inst);

nlohmann::json reduction_report(const Instance& inst, const Transcript& t, const Rational& c_disj);

}  // namespace congestlb
