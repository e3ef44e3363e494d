#include <doctest.h>

#include "divgraph/arith.hpp"
#include "divgraph/errors.hpp"
#include "divgraph/value.hpp"

using namespace divgraph;

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("floor division matches the integer floor of the exact quotient") {
  for (int p = -12; p <= 12; ++p) {
    for (int q = 1; q <= 5; ++q) {
      for (int d : {-3, -2, 2, 3}) {
        const Rational a(p, q);
        const Rational b(d, 2);
        const Integer k = floor_div(a, b);
        // k <= a/b < k + 1
        const Rational ratio = a / b;
        CHECK(Rational(k) <= ratio);
        CHECK(ratio < Rational(k + 1));
      }
    }
  }
}

TEST_CASE("exponent formatting") {
  CHECK(format_exponent(Rational(3)) == "3");
  CHECK(format_exponent(Rational(1, 2)) == "(1/2)");
  CHECK(to_string(Rational(-5, 6)) == "-5/6");
}

TEST_CASE("prime factors multiply back and are prime") {
  for (long n = 2; n <= 500; ++n) {
    const auto factors = prime_factors(Integer(n));
    Integer product = 1;
    for (const auto& p : factors) {
      product *= p;
      bool trial_prime = p >= 2;
      for (Integer d = 2; d * d <= p; ++d) {
        if (p % d == 0) trial_prime = false;
      }
      CHECK(trial_prime);
    }
    CHECK(product == n);
  }
  CHECK(is_prime(Integer(97)));
  CHECK_FALSE(is_prime(Integer(91)));
}

TEST_CASE("positive divisors by brute force") {
  for (long n = 1; n <= 60; ++n) {
    std::vector<Integer> expected;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) expected.emplace_back(d);
    }
    CHECK(positive_divisors(Integer(n)) == expected);
  }
}

TEST_CASE("values compare lexicographically and parse") {
  const Value a = parse_value("(1, -1/3)");
  CHECK(a.dimension() == 2);
  CHECK(a[1] == Rational(-1, 3));
  CHECK(Value{Rational(0), Rational(5)} < Value{Rational(1), Rational(-5)});
  CHECK((a + a).to_string() == "(2, -2/3)");
  CHECK(parse_value("7").to_string() == "7");
  CHECK_THROWS_AS(parse_value("(1, 2"), Error);
  CHECK(ValueGroup{1, true}.contains(a));
  CHECK_FALSE(ValueGroup{2, false}.contains(a));
}
