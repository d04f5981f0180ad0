#pragma once

#include <map>
#include <string>

#include "graphvn/rational.hpp"

namespace graphvn {

// Exact element of the rational vector space spanned by sqrt(d) for
// squarefree d >= 1. Canonical: no zero coefficients, keys squarefree.
class SurdScalar {
 public:
  SurdScalar() = default;
  SurdScalar(const Rational& q);    // q * sqrt(1)
  SurdScalar(long n) : SurdScalar(Rational(n)) {}

  // sqrt(q) for rational q > 0, normalized to coeff * sqrt(squarefree).
  static SurdScalar sqrt_of(const Rational& q);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // pre: is_rational()
  Rational rational_value() const;

  SurdScalar& operator+=(const SurdScalar& o);
  SurdScalar& operator-=(const SurdScalar& o);
  friend SurdScalar operator+(SurdScalar a, const SurdScalar& b) { return a += b; }
  friend SurdScalar operator-(SurdScalar a, const SurdScalar& b) { return a -= b; }
  friend SurdScalar operator*(const SurdScalar& a, const SurdScalar& b);
  SurdScalar& operator*=(const SurdScalar& o) { return *this = *this * o; }
  friend bool operator==(const SurdScalar& a, const SurdScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SurdScalar& a, const SurdScalar& b) {
    return !(a == b);
  }

  double to_double() const;

  // "0", "1/2", "2*sqrt(3)", "1/2 + 3*sqrt(2)", "1 - sqrt(2)".
  std::string str() const;

  const std::map<Int, Rational>& terms() const { return terms_; }

 private:
  void insert(const Int& radical, const Rational& coeff);
  std::map<Int, Rational> terms_;  // squarefree radical -> coefficient
};

}  // namespace graphvn
