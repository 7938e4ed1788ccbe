#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orbistat {

// Arbitrary-precision integers and exact rationals used throughout the
// algebraic half of the library.  Floating point is confined to the
// counting/sieve module.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& n) { return n.str(); }

// Renders "p/q" in lowest terms, "n" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.str(); }

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

}  // namespace orbistat
