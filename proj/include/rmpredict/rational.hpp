#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rmp {

using Rational = boost::rational<std::int64_t>;

// Parses "p/q", "p" (integer) into an exact rational. Decimal literals such as
// "0.5" are rejected: exact-mode comparisons must not depend on rounding.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

}  // namespace rmp
