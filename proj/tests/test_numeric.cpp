#include <doctest.h>

#include "noodle/numeric.hpp"

using namespace noodle;

namespace {

// independent oracle: Cat_{n+1} = sum_i Cat_i Cat_{n-i}
std::vector<BigInt> catalan_by_recurrence(int up_to) {
  std::vector<BigInt> cat{1};
  for (int n = 0; n < up_to; ++n) {
    BigInt next = 0;
    for (int i = 0; i <= n; ++i) next += cat[i] * cat[n - i];
    cat.push_back(next);
  }
  return cat;
}

}  // namespace

TEST_CASE("catalan and central binomial") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  CHECK(central_binomial(0) == 1);
  CHECK(central_binomial(2) == 6);
  CHECK(central_binomial(4) == 70);

  auto oracle = catalan_by_recurrence(40);
  for (int n = 0; n <= 40; ++n) CHECK(catalan(n) == oracle[n]);
  for (int n = 0; n <= 40; ++n) CHECK(central_binomial(n) == catalan(n) * (n + 1));
}

TEST_CASE("dyadic canonical form and arithmetic") {
  Dyadic half = Dyadic::scaled(1, 1);
  Dyadic quarter = Dyadic::scaled(1, 2);
  CHECK(half + half == Dyadic(1));
  CHECK(half * half == quarter);
  CHECK((half - half).is_zero());

  Dyadic x = Dyadic::scaled(6, 3);  // 6/8 = 3/4 canonically
  CHECK(x.numerator() == 3);
  CHECK(x.exponent() == 2);

  Dyadic two = Dyadic::scaled(4, 1);  // 4/2 = 2 = 1/2^-1
  CHECK(two.numerator() == 1);
  CHECK(two.exponent() == -1);
  CHECK(two == Dyadic(2));

  CHECK(half < Dyadic(1));
  CHECK(quarter < half);
  CHECK(half.to_double() == 0.5);

  // associativity/commutativity on a few mixed-scale values
  Dyadic a = Dyadic::scaled(7, 5);
  Dyadic b = Dyadic::scaled(-3, 2);
  Dyadic c = Dyadic::scaled(11, 9);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("rational arithmetic and directed decimals") {
  Rational third(1, 3);
  Rational sixth(1, 6);
  CHECK(third + sixth == Rational(1, 2));
  CHECK(third * Rational(3) == Rational(1));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));

  CHECK(third.decimal(4, RoundDir::Down) == "0.3333");
  CHECK(third.decimal(4, RoundDir::Up) == "0.3334");
  CHECK(Rational(1, 2).decimal(3, RoundDir::Down) == "0.500");
  CHECK(Rational(1, 2).decimal(3, RoundDir::Up) == "0.500");
  CHECK(Rational(5, 4).decimal(1, RoundDir::Down) == "1.2");
  CHECK(Rational(5, 4).decimal(1, RoundDir::Up) == "1.3");

  Rational from_dyadic(Dyadic::scaled(3, 4));
  CHECK(from_dyadic == Rational(3, 16));

  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
}
