#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace orbiknot {

using Rational = boost::rational<std::int64_t>;

/// Parses "b/a" or an integer "b". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list "b/a,b/a,...".
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(Rational const &q);

}  // namespace orbiknot
