#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace congestlb {

using Bits = std::vector<bool>;

// "0110", "0x6f" (each hex digit is four bits, most significant first) or
// "@path" to read either form from a file.
Bits parse_bits(std::string_view text);
std::string bits_to_string(const Bits& bits);

bool intersects(const Bits& a, const Bits& b);
// each bit is 1 independently with probability `density`
Bits random_bits(std::size_t n, double density, std::mt19937_64& rng);

// bit j of i, least significant first
inline bool bit_of(std::size_t i, std::size_t j) { return (i >> j) & 1u; }

// exact log2 of a power of two >= 1; throws otherwise
unsigned log2_exact(std::uint64_t k);
// ceil(log2(x)) for x >= 1
unsigned ceil_log2(std::uint64_t x);

}  // namespace congestlb
