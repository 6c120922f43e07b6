#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace congestlb {

// Declaration order is the canonical role rank.
enum class Role : std::uint8_t {
  L,
  R,
  LPrime,
  RPrime,
  F,
  T,
  FPrime,
  TPrime,
  HubL,
  HubR,
  HubLSplit,
  HubRSplit,
  A,
  B,
  X,
  Path,
  Tree,
  CliquePad,
  Vertex,  // plain numbered vertex of a non-gadget graph
};

enum class Copy : std::uint8_t { None, One, Two };

Copy copy_from_int(int c);  // 0, 1, 2

// Identity of a node. Value type; path and tree labels share their
// endpoint/root labels.
//
// Rendering grammar (parse(str()) round-trips):
//   label  := atom ('@' '1' | '@' '2')?
//   atom   := 'l' N | 'r' N | "l'" N | "r'" N | 'f' N | 't' N | "f'" N | "t'" N
//           | 'l' 'k' ('+' N)? ('[' N ']')?     hub; '[j]' marks a split hub
//           | 'r' 'k' ('+' N)? ('[' N ']')?
//           | 'a' | 'b' | 'x' N | 'c' N | 'v' N
//           | "y(" label ',' label ',' N ',' N ')'      path: ends, lane, step
//           | "tree(" label ',' N ',' N ')'            root, tree id, heap position
// Hub levels are offsets from k: "lk" is level k, "lk+1" is level k+1.
class NodeLabel {
 public:
  static NodeLabel l(int i, Copy c = Copy::None) { return atom(Role::L, i, c); }
  static NodeLabel r(int i, Copy c = Copy::None) { return atom(Role::R, i, c); }
  static NodeLabel l_prime(int i, Copy c = Copy::None) { return atom(Role::LPrime, i, c); }
  static NodeLabel r_prime(int i, Copy c = Copy::None) { return atom(Role::RPrime, i, c); }
  static NodeLabel f(int j, Copy c = Copy::None) { return atom(Role::F, j, c); }
  static NodeLabel t(int j, Copy c = Copy::None) { return atom(Role::T, j, c); }
  static NodeLabel f_prime(int j, Copy c = Copy::None) { return atom(Role::FPrime, j, c); }
  static NodeLabel t_prime(int j, Copy c = Copy::None) { return atom(Role::TPrime, j, c); }
  // level_offset 0 => l_k, 1 => l_{k+1}, 2 => l_{k+2}
  static NodeLabel hub_l(int level_offset, Copy c = Copy::None) { return atom(Role::HubL, level_offset, c); }
  static NodeLabel hub_r(int level_offset, Copy c = Copy::None) { return atom(Role::HubR, level_offset, c); }
  static NodeLabel hub_l_split(int j, Copy c = Copy::None) { return atom(Role::HubLSplit, j, c); }
  static NodeLabel hub_r_split(int j, Copy c = Copy::None) { return atom(Role::HubRSplit, j, c); }
  static NodeLabel a() { return atom(Role::A, 0, Copy::None); }
  static NodeLabel b() { return atom(Role::B, 0, Copy::None); }
  static NodeLabel x(int m) { return atom(Role::X, m, Copy::None); }
  static NodeLabel clique_pad(int i) { return atom(Role::CliquePad, i, Copy::None); }
  static NodeLabel vertex(int i) { return atom(Role::Vertex, i, Copy::None); }
  // step-th interior node of the lane-th path from `from` to `to`
  static NodeLabel path(const NodeLabel& from, const NodeLabel& to, int lane, int step);
  static NodeLabel tree(const NodeLabel& root, int tree_id, int position);

  static NodeLabel parse(std::string_view text);

  Role role() const { return role_; }
  Copy copy() const { return copy_; }
  // i, j, level offset or m depending on role; lane for paths, tree id for trees
  int index() const { return index_; }
  int step() const { return step_; }  // path step or tree position
  const NodeLabel& first() const;     // path start or tree root
  const NodeLabel& second() const;    // path end
  bool is_compound() const { return role_ == Role::Path || role_ == Role::Tree; }

  std::string str() const;

  friend std::strong_ordering operator<=>(const NodeLabel& x, const NodeLabel& y);
  friend bool operator==(const NodeLabel& x, const NodeLabel& y) { return (x <=> y) == 0; }

 private:
  static NodeLabel atom(Role role, int index, Copy c);

  Role role_ = Role::A;
  Copy copy_ = Copy::None;
  int index_ = 0;
  int step_ = 0;
  std::shared_ptr<const NodeLabel> first_;
  std::shared_ptr<const NodeLabel> second_;
};

}  // namespace congestlb
