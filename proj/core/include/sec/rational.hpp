#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace sec {

/// Exact rational in lowest terms with a positive denominator.
using ExactRational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const ExactRational& r);

} // namespace sec
