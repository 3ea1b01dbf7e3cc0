#ifndef LAGNET_RATIONAL_HPP
#define LAGNET_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagnet {

// All arithmetic in this library is exact. Rat is an arbitrary-precision
// rational kept in lowest terms with a positive denominator; there is no
// floating-point mode anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument
// on malformed input or q == 0.
Rat rat_parse(std::string_view s);

// Formats as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& r);

inline int sign(const Rat& r) { return r.sign(); }

}  // namespace lagnet

#endif
