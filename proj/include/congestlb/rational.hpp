#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace congestlb {

using Rational = boost::rational<std::int64_t>;

// accepts "3", "-2", "3/2"
Rational parse_rational(std::string_view text);
// "p/q", or just "p" when q == 1
std::string to_string(const Rational& r);

// smallest integer >= r
std::int64_t ceil_rational(const Rational& r);

}  // namespace congestlb
