#pragma once

#include <map>
#include <stdexcept>

#include "graphvn/rational.hpp"

namespace graphvn {

// Raised when the factorization budget (trial division to 1e6, then Pollard
// rho with a bounded iteration count) is exhausted.
struct FactorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// prime -> exponent, exponents > 0. factorize(1) == {}.
using FactorMap = std::map<Int, int>;

FactorMap factorize(Int n);  // pre: n >= 1

// Signed exponents over the primes of numerator and denominator.
std::map<Int, int> factor_rational(const Rational& q);  // pre: q > 0

// sqrt(q) = coeff * sqrt(radical) with radical squarefree, coeff rational.
struct SqrtDecomposition {
  Rational coeff;
  Int radical;
};
SqrtDecomposition decompose_sqrt(const Rational& q);  // pre: q > 0

bool is_probable_prime(const Int& n);

}  // namespace graphvn
