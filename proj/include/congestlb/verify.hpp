#pragma once

#include "congestlb/graph_io.hpp"
#include "congestlb/instance.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace congestlb {

// Everything needed to rebuild an instance.
struct InstanceConfig {
  Construction construction = Construction::DiameterExact;
  ConstructionParams params;
  SpannerParams spanner;  // used when construction == Spanner
};

Instance build_instance(const InstanceConfig& cfg, const Bits& sa, const Bits& sb);
std::size_t input_length(const InstanceConfig& cfg);

// Recreates construction, params and input from a saved document; the graph,
// owners and cut come from the file, input-edge indices from a rebuild.
Instance load_instance(const GraphDocument& doc);

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json observed;
  std::string expected;
};

// Single calibrated constant for edge_count <= c * n * log2(n).
Rational sparsity_constant();

struct VerifyOptions {
  bool structural = true;  // input-independent distance spot checks
  bool sparsity = true;
};

std::vector<CheckResult> verify_instance(const Instance& inst, const VerifyOptions& opt = {});
bool all_pass(const std::vector<CheckResult>& checks);
nlohmann::json checks_json(const std::vector<CheckResult>& checks);

// The distance each construction hinges on, and the value it should take.
struct Metric {
  std::string name;
  std::int64_t observed;
  std::string predicted;
};
Metric headline_metric(const Instance& inst);

struct InputCase {
  std::string kind;  // exhaustive, random, all-zeros, all-ones, single-shared-bit
  Bits sa;
  Bits sb;
};

// Forced cases first, then either every pair (exhaustive) or `trials` random pairs.
std::vector<InputCase> input_cases(std::size_t length, bool exhaustive, std::size_t trials, std::uint64_t seed,
                                   double density);

}  // namespace congestlb
