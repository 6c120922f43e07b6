#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace congestlb {

// Bad arguments to a construction, oracle or command.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(std::uint32_t a, std::uint32_t b, const std::string& what)
      : std::runtime_error(what), a(a), b(b) {}
  std::uint32_t a;
  std::uint32_t b;
};

// A node program broke the CONGEST rules (message too long, wrong port count).
class ProtocolViolation : public std::runtime_error {
 public:
  ProtocolViolation(std::uint32_t node, std::size_t round, const std::string& why)
      : std::runtime_error("protocol violation at node " + std::to_string(node) + ", round " +
                           std::to_string(round) + ": " + why),
        node(node),
        round(round) {}
  std::uint32_t node;
  std::size_t round;
};

}  // namespace congestlb
