#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rcdim {

// All dimension arithmetic is exact. Near-boundary sign decisions are the
// whole point, so no floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace rcdim
