#include "graphvn/factor.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cstdint>

namespace graphvn {
namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kRhoBudget = 40'000'000;  // modmul steps per factorize()

using boost::multiprecision::gcd;
using boost::multiprecision::powm;

bool miller_rabin(const Int& n) {
  // Deterministic witness set, valid far beyond the 2^63 input bound.
  static const int witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  Int d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (int a : witnesses) {
    if (n <= a) return true;
    Int x = powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor.
Int pollard_brent(const Int& n, std::uint64_t& budget) {
  if ((n & 1) == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, saved = 2;
    Int q = 1;
    std::uint64_t steps = 0;
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    for (std::uint64_t lam = 1; d == 1; lam *= 2) {
      x = y;
      for (std::uint64_t i = 0; i < lam && d == 1; ++i) {
        y = f(y);
        q = (q * abs(x - y)) % n;
        if (++steps % 128 == 0) {
          d = gcd(q, n);
          saved = y;
        }
        if (budget-- == 0) throw FactorError("factorization budget exhausted");
      }
      if (d == 1) d = gcd(q, n);
    }
    if (d != n) return d;
    // Backtrack: the gcd batch overshot, redo single steps from the save.
    y = saved;
    d = 1;
    while (d == 1) {
      y = f(y);
      d = gcd(abs(x - y), n);
      if (budget-- == 0) throw FactorError("factorization budget exhausted");
    }
    if (d != n) return d;
    // Cycle degenerated for this c; retry with the next polynomial.
  }
}

void factor_into(Int n, FactorMap& out, std::uint64_t& budget) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n, budget);
  factor_into(d, out, budget);
  factor_into(n / d, out, budget);
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(n);
}

FactorMap factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  FactorMap out;
  for (std::uint64_t p = 2; p <= kTrialLimit && Int(p) * p <= n; p == 2 ? p = 3 : p += 2) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
  }
  if (n > 1) {
    // No factor <= 1e6 remains; below 1e12 the residue must be prime.
    if (n <= Int(kTrialLimit) * kTrialLimit) {
      ++out[n];
    } else {
      std::uint64_t budget = kRhoBudget;
      factor_into(n, out, budget);
    }
  }
  return out;
}

std::map<Int, int> factor_rational(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("factor_rational: argument must be > 0");
  std::map<Int, int> out;
  for (auto& [p, e] : factorize(num(q))) out[p] += e;
  for (auto& [p, e] : factorize(den(q))) out[p] -= e;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

SqrtDecomposition decompose_sqrt(const Rational& q) {
  // sqrt(p/d) = sqrt(p*d)/d; split p*d into square part and squarefree rest.
  auto exps = factorize(num(q));
  for (auto& [p, e] : factorize(den(q))) exps[p] += e;
  Rational coeff(1, den(q));
  Int radical = 1;
  for (auto& [p, e] : exps) {
    for (int i = 0; i < e / 2; ++i) coeff *= p;
    if (e % 2) radical *= p;
  }
  return {coeff, radical};
}

}  // namespace graphvn
