#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace popdiff {

// Exact arithmetic everywhere a density or bound appears; no value in this
// library is ever derived from a binary float.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
// round half up: floor(q + 1/2)
Int rat_round_half_up(const Rat& q);

long long to_ll(const Int& v); // throws cap_exceeded_error if out of range

// Accepts "3/20", "-7", "0.15" (exact decimal). Throws parse_error.
Rat parse_rational(const std::string& text);

// "num/den" (or just "num" for integers).
std::string format_rational(const Rat& q);

// Fixed-point decimal rendering, round half away from zero.
std::string decimal_string(const Rat& q, int digits = 6);

} // namespace popdiff
