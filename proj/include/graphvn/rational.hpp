#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace graphvn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Largest allowed numerator/denominator of an input weight after reduction.
inline const Int& weight_bound() {
  static const Int b = Int(1) << 63;
  return b;
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p/q" (also bare "p") with p, q positive integers, p/q <= 2^63 parts
// after reduction.
Rational parse_weight(const std::string& text);

// "p/q" with the denominator always present ("6/1").
std::string fraction_string(const Rational& q);

// "p" when the denominator is 1, else "p/q".
std::string minimal_string(const Rational& q);

double to_double(const Rational& q);

// Floor division, used by lattice reduction: largest m with m*b <= a, b > 0.
Int floor_div(const Int& a, const Int& b);

}  // namespace graphvn
