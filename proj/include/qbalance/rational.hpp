#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace qbalance {

// Exact arithmetic for mean weights and half-integral targets. Never
// compare these through floating point.
using Rational = boost::rational<std::int64_t>;

// "3" when integral, "14/5" otherwise.
std::string to_string(const Rational& value);

}  // namespace qbalance
