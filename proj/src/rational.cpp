#include "graphvn/rational.hpp"

namespace graphvn {

Rational parse_weight(const std::string& text) {
  auto bad = [&](const char* why) {
    throw ParseError("bad weight '" + text + "': " + why);
  };
  if (text.empty()) bad("empty");
  std::string ns = text, ds = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    ns = text.substr(0, slash);
    ds = text.substr(slash + 1);
  }
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!digits(ns) || !digits(ds)) bad("expected positive integers p/q");
  Int n(ns), d(ds);
  if (n == 0 || d == 0) bad("parts must be positive");
  Rational q(n, d);  // reduces
  if (num(q) > weight_bound() || den(q) > weight_bound())
    bad("reduced numerator/denominator exceeds 2^63");
  return q;
}

std::string fraction_string(const Rational& q) {
  return num(q).str() + "/" + den(q).str();
}

std::string minimal_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace graphvn
