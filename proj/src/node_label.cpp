#include "congestlb/node_label.hpp"

#include <charconv>
#include <stdexcept>

namespace congestlb {

Copy copy_from_int(int c) {
  switch (c) {
    case 0: return Copy::None;
    case 1: return Copy::One;
    case 2: return Copy::Two;
  }
  throw std::invalid_argument("copy tag must be 0, 1 or 2");
}

NodeLabel NodeLabel::atom(Role role, int index, Copy c) {
  if (index < 0) throw std::invalid_argument("negative label index");
  NodeLabel n;
  n.role_ = role;
  n.index_ = index;
  n.copy_ = c;
  return n;
}

NodeLabel NodeLabel::path(const NodeLabel& from, const NodeLabel& to, int lane, int step) {
  if (from.role_ == Role::Path || to.role_ == Role::Path)
    throw std::invalid_argument("path endpoints cannot be path nodes");
  if (step < 1) throw std::invalid_argument("path step must be >= 1");
  if (lane < 0) throw std::invalid_argument("negative path lane");
  NodeLabel n;
  n.role_ = Role::Path;
  n.index_ = lane;
  n.step_ = step;
  n.first_ = std::make_shared<const NodeLabel>(from);
  n.second_ = std::make_shared<const NodeLabel>(to);
  return n;
}

NodeLabel NodeLabel::tree(const NodeLabel& root, int tree_id, int position) {
  if (position < 1) throw std::invalid_argument("tree position must be >= 1");
  if (tree_id < 0) throw std::invalid_argument("negative tree id");
  NodeLabel n;
  n.role_ = Role::Tree;
  n.index_ = tree_id;
  n.step_ = position;
  n.first_ = std::make_shared<const NodeLabel>(root);
  return n;
}

const NodeLabel& NodeLabel::first() const {
  if (!first_) throw std::logic_error("label " + str() + " has no root/endpoint");
  return *first_;
}

const NodeLabel& NodeLabel::second() const {
  if (!second_) throw std::logic_error("label " + str() + " has no second endpoint");
  return *second_;
}

std::strong_ordering operator<=>(const NodeLabel& x, const NodeLabel& y) {
  if (auto c = x.role_ <=> y.role_; c != 0) return c;
  if (auto c = x.copy_ <=> y.copy_; c != 0) return c;
  switch (x.role_) {
    case Role::Path:
      if (auto c = *x.first_ <=> *y.first_; c != 0) return c;
      if (auto c = *x.second_ <=> *y.second_; c != 0) return c;
      if (auto c = x.index_ <=> y.index_; c != 0) return c;
      return x.step_ <=> y.step_;
    case Role::Tree:
      if (auto c = *x.first_ <=> *y.first_; c != 0) return c;
      if (auto c = x.index_ <=> y.index_; c != 0) return c;
      return x.step_ <=> y.step_;
    default:
      return x.index_ <=> y.index_;
  }
}

namespace {

std::string hub_text(char side, int offset) {
  std::string s(1, side);
  s += 'k';
  if (offset > 0) s += "+" + std::to_string(offset);
  return s;
}

}  // namespace

std::string NodeLabel::str() const {
  std::string s;
  auto num = [&](const char* prefix) { s = prefix + std::to_string(index_); };
  switch (role_) {
    case Role::L: num("l"); break;
    case Role::R: num("r"); break;
    case Role::LPrime: num("l'"); break;
    case Role::RPrime: num("r'"); break;
    case Role::F: num("f"); break;
    case Role::T: num("t"); break;
    case Role::FPrime: num("f'"); break;
    case Role::TPrime: num("t'"); break;
    case Role::HubL: s = hub_text('l', index_); break;
    case Role::HubR: s = hub_text('r', index_); break;
    case Role::HubLSplit: s = hub_text('l', 1) + "[" + std::to_string(index_) + "]"; break;
    case Role::HubRSplit: s = hub_text('r', 1) + "[" + std::to_string(index_) + "]"; break;
    case Role::A: s = "a"; break;
    case Role::B: s = "b"; break;
    case Role::X: num("x"); break;
    case Role::CliquePad: num("c"); break;
    case Role::Vertex: num("v"); break;
    case Role::Path:
      s = "y(" + first_->str() + "," + second_->str() + "," + std::to_string(index_) + "," +
          std::to_string(step_) + ")";
      break;
    case Role::Tree:
      s = "tree(" + first_->str() + "," + std::to_string(index_) + "," + std::to_string(step_) + ")";
      break;
  }
  if (copy_ == Copy::One) s += "@1";
  if (copy_ == Copy::Two) s += "@2";
  return s;
}

namespace {

class LabelParser {
 public:
  explicit LabelParser(std::string_view text) : text_(text) {}

  NodeLabel parse_all() {
    NodeLabel n = label();
    if (pos_ != text_.size()) fail("trailing characters");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad node label '" + std::string(text_) + "' at " + std::to_string(pos_) +
                                ": " + why);
  }
  bool eat(std::string_view s) {
    if (text_.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view s) {
    if (!eat(s)) fail("expected '" + std::string(s) + "'");
  }
  int number() {
    int v = 0;
    auto* begin = text_.data() + pos_;
    auto [p, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc() || p == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(p - begin);
    return v;
  }
  Copy copy_suffix() {
    if (eat("@1")) return Copy::One;
    if (eat("@2")) return Copy::Two;
    return Copy::None;
  }
  NodeLabel hub(bool left) {
    int offset = 0;
    if (eat("+")) offset = number();
    if (eat("[")) {
      int j = number();
      expect("]");
      if (offset != 1) fail("split hubs hang off level k+1");
      Copy c = copy_suffix();
      return left ? NodeLabel::hub_l_split(j, c) : NodeLabel::hub_r_split(j, c);
    }
    Copy c = copy_suffix();
    return left ? NodeLabel::hub_l(offset, c) : NodeLabel::hub_r(offset, c);
  }
  NodeLabel label() {
    if (eat("y(")) {
      NodeLabel a = label();
      expect(",");
      NodeLabel b = label();
      expect(",");
      int lane = number();
      expect(",");
      int step = number();
      expect(")");
      return NodeLabel::path(a, b, lane, step);
    }
    if (eat("tree(")) {
      NodeLabel root = label();
      expect(",");
      int id = number();
      expect(",");
      int pos = number();
      expect(")");
      return NodeLabel::tree(root, id, pos);
    }
    if (eat("lk")) return hub(true);
    if (eat("rk")) return hub(false);
    if (eat("l'")) return indexed(Role::LPrime);
    if (eat("r'")) return indexed(Role::RPrime);
    if (eat("f'")) return indexed(Role::FPrime);
    if (eat("t'")) return indexed(Role::TPrime);
    if (eat("l")) return indexed(Role::L);
    if (eat("r")) return indexed(Role::R);
    if (eat("f")) return indexed(Role::F);
    if (eat("t")) return indexed(Role::T);
    if (eat("x")) return NodeLabel::x(number());
    if (eat("c")) return NodeLabel::clique_pad(number());
    if (eat("v")) return NodeLabel::vertex(number());
    if (eat("a")) return NodeLabel::a();
    if (eat("b")) return NodeLabel::b();
    fail("unknown role");
  }
  NodeLabel indexed(Role role) {
    int i = number();
    Copy c = copy_suffix();
    switch (role) {
      case Role::L: return NodeLabel::l(i, c);
      case Role::R: return NodeLabel::r(i, c);
      case Role::LPrime: return NodeLabel::l_prime(i, c);
      case Role::RPrime: return NodeLabel::r_prime(i, c);
      case Role::F: return NodeLabel::f(i, c);
      case Role::T: return NodeLabel::t(i, c);
      case Role::FPrime: return NodeLabel::f_prime(i, c);
      case Role::TPrime: return NodeLabel::t_prime(i, c);
      default: fail("internal: not an indexed role");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NodeLabel NodeLabel::parse(std::string_view text) { return LabelParser(text).parse_all(); }

}  // namespace congestlb
