#include "graphvn/surd.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cmath>
#include <sstream>

#include "graphvn/factor.hpp"

namespace graphvn {

SurdScalar::SurdScalar(const Rational& q) { insert(1, q); }

SurdScalar SurdScalar::sqrt_of(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("sqrt_of: argument must be > 0");
  auto dec = decompose_sqrt(q);
  SurdScalar s;
  s.insert(dec.radical, dec.coeff);
  return s;
}

bool SurdScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdScalar::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::logic_error("rational_value on irrational surd");
  return terms_.begin()->second;
}

void SurdScalar::insert(const Int& radical, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(radical, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SurdScalar& SurdScalar::operator+=(const SurdScalar& o) {
  for (auto& [d, c] : o.terms_) insert(d, c);
  return *this;
}

SurdScalar& SurdScalar::operator-=(const SurdScalar& o) {
  for (auto& [d, c] : o.terms_) insert(d, -c);
  return *this;
}

SurdScalar operator*(const SurdScalar& a, const SurdScalar& b) {
  SurdScalar out;
  for (auto& [d1, c1] : a.terms_) {
    for (auto& [d2, c2] : b.terms_) {
      // d1, d2 squarefree: sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2), g = gcd.
      Int g = boost::multiprecision::gcd(d1, d2);
      out.insert((d1 / g) * (d2 / g), c1 * c2 * g);
    }
  }
  return out;
}

double SurdScalar::to_double() const {
  double acc = 0;
  for (auto& [d, c] : terms_)
    acc += graphvn::to_double(c) * std::sqrt(d.convert_to<double>());
  return acc;
}

std::string SurdScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [d, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 1) {
      out << minimal_string(mag);
    } else if (mag == 1) {
      out << "sqrt(" << d.str() << ")";
    } else {
      out << minimal_string(mag) << "*sqrt(" << d.str() << ")";
    }
  }
  return out.str();
}

}  // namespace graphvn
