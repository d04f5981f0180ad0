#include <doctest.h>

#include "graphvn/factor.hpp"
#include "graphvn/rational.hpp"
#include "graphvn/surd.hpp"

using namespace graphvn;

TEST_CASE("weight parsing accepts p/q and bare integers") {
  CHECK(parse_weight("6/1") == Rational(6));
  CHECK(parse_weight("1/3") == Rational(1, 3));
  CHECK(parse_weight("7") == Rational(7));
  CHECK(parse_weight("4/6") == Rational(2, 3));  // reduced
  // 2^63 parts are allowed after reduction, one more is not.
  CHECK(parse_weight("9223372036854775808/1") == Rational(Int(1) << 63));
  CHECK(parse_weight("18446744073709551616/2") == Rational(Int(1) << 63));
  CHECK_THROWS_AS(parse_weight("9223372036854775809/1"), ParseError);
}

TEST_CASE("weight parsing rejects malformed input") {
  for (const char* bad : {"", "0", "0/5", "1/0", "-1/2", "a", "1/2/3", "1.5", " 2"})
    CHECK_THROWS_AS(parse_weight(bad), ParseError);
}

TEST_CASE("rational rendering") {
  CHECK(fraction_string(Rational(6)) == "6/1");
  CHECK(fraction_string(Rational(2, 3)) == "2/3");
  CHECK(minimal_string(Rational(6)) == "6");
  CHECK(minimal_string(Rational(2, 3)) == "2/3");
  CHECK(to_double(Rational(1, 2)) == 0.5);
}

TEST_CASE("floor division rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(floor_div(6, 3) == 2);
  CHECK(floor_div(-6, 3) == -2);
}

TEST_CASE("factorization of small and structured integers") {
  CHECK(factorize(1).empty());
  CHECK(factorize(2) == FactorMap{{2, 1}});
  CHECK(factorize(360) == FactorMap{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1024) == FactorMap{{2, 10}});
  CHECK(factorize(1000000007) == FactorMap{{1000000007, 1}});
  // Semiprime beyond the trial-division bound exercises the rho stage.
  Int semiprime = Int(1000000007) * Int(1000000009);
  CHECK(factorize(semiprime) == FactorMap{{1000000007, 1}, {1000000009, 1}});
}

TEST_CASE("rational factorization uses signed exponents") {
  CHECK(factor_rational(Rational(6)) == std::map<Int, int>{{2, 1}, {3, 1}});
  CHECK(factor_rational(Rational(1, 3)) == std::map<Int, int>{{3, -1}});
  CHECK(factor_rational(Rational(4, 9)) == std::map<Int, int>{{2, 2}, {3, -2}});
  CHECK(factor_rational(Rational(1)).empty());
}

TEST_CASE("square root decomposition") {
  auto d = decompose_sqrt(Rational(6));
  CHECK(d.coeff == Rational(1));
  CHECK(d.radical == 6);
  d = decompose_sqrt(Rational(4, 9));
  CHECK(d.coeff == Rational(2, 3));
  CHECK(d.radical == 1);
  d = decompose_sqrt(Rational(8));
  CHECK(d.coeff == Rational(2));
  CHECK(d.radical == 2);
  d = decompose_sqrt(Rational(1, 2));
  CHECK(d.coeff == Rational(1, 2));
  CHECK(d.radical == 2);
}

TEST_CASE("primality of edge cases") {
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(3));
  CHECK(is_probable_prime(97));
  CHECK(is_probable_prime(1000000007));
  CHECK(is_probable_prime(2147483647));
  CHECK_FALSE(is_probable_prime(1));
  CHECK_FALSE(is_probable_prime(4));
  CHECK_FALSE(is_probable_prime(561));  // Carmichael
}

TEST_CASE("surd arithmetic is exact") {
  SurdScalar r2 = SurdScalar::sqrt_of(Rational(2));
  SurdScalar r3 = SurdScalar::sqrt_of(Rational(3));
  CHECK(r2 * r2 == SurdScalar(Rational(2)));
  CHECK(r2 * r3 == SurdScalar::sqrt_of(Rational(6)));
  CHECK((r2 - r2).is_zero());
  CHECK((SurdScalar(1) + r2) * (SurdScalar(1) - r2) == SurdScalar(-1));
  // sqrt(8) = 2*sqrt(2)
  CHECK(SurdScalar::sqrt_of(Rational(8)) == SurdScalar(Rational(2)) * r2);
  CHECK(SurdScalar::sqrt_of(Rational(4, 9)).is_rational());
  CHECK(SurdScalar::sqrt_of(Rational(4, 9)).rational_value() == Rational(2, 3));
  CHECK_FALSE(r2.is_rational());
}

TEST_CASE("surd rendering") {
  CHECK(SurdScalar().str() == "0");
  CHECK(SurdScalar(Rational(1, 2)).str() == "1/2");
  CHECK(SurdScalar::sqrt_of(Rational(6)).str() == "sqrt(6)");
  CHECK(SurdScalar::sqrt_of(Rational(12)).str() == "2*sqrt(3)");
  CHECK((SurdScalar(Rational(1, 2)) +
         SurdScalar(Rational(3)) * SurdScalar::sqrt_of(Rational(2)))
            .str() == "1/2 + 3*sqrt(2)");
  CHECK((SurdScalar(1) - SurdScalar::sqrt_of(Rational(2))).str() == "1 - sqrt(2)");
}

TEST_CASE("surd numeric value") {
  CHECK(SurdScalar::sqrt_of(Rational(6)).to_double() ==
        doctest::Approx(2.449489742783178).epsilon(1e-15));
}
