#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace codefact {

// Exact arithmetic everywhere: coefficients are arbitrary-precision
// integers, code measures are exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace codefact
