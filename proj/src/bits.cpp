#include "congestlb/bits.hpp"
#include "congestlb/errors.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

namespace congestlb {

Bits parse_bits(std::string_view text) {
  if (text.starts_with("@")) {
    std::string path(text.substr(1));
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read bit string file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string body = ss.str();
    std::string compact;
    for (char ch : body)
      if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    if (compact.starts_with("@")) throw PreconditionError("nested @file in '" + path + "'");
    return parse_bits(compact);
  }
  Bits out;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    for (char ch : text.substr(2)) {
      int v;
      if (ch >= '0' && ch <= '9')
        v = ch - '0';
      else if (ch >= 'a' && ch <= 'f')
        v = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F')
        v = ch - 'A' + 10;
      else
        throw PreconditionError("bad hex digit '" + std::string(1, ch) + "' in bit string");
      for (int b = 3; b >= 0; --b) out.push_back((v >> b) & 1);
    }
    if (out.empty()) throw PreconditionError("empty hex bit string");
    return out;
  }
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw PreconditionError("bit strings use 0/1, got '" + std::string(text) + "'");
    out.push_back(ch == '1');
  }
  return out;
}

std::string bits_to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] && b[i]) return true;
  return false;
}

Bits random_bits(std::size_t n, double density, std::mt19937_64& rng) {
  if (density < 0.0 || density > 1.0) throw PreconditionError("density must lie in [0,1]");
  std::bernoulli_distribution coin(density);
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = coin(rng);
  return out;
}

unsigned log2_exact(std::uint64_t k) {
  if (k == 0 || !std::has_single_bit(k)) throw PreconditionError(std::to_string(k) + " is not a power of two");
  return static_cast<unsigned>(std::countr_zero(k));
}

unsigned ceil_log2(std::uint64_t x) {
  if (x == 0) throw PreconditionError("ceil_log2(0)");
  return x == 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

}  // namespace congestlb
