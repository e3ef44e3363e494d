#include <doctest.h>

#include <random>

#include "divgraph/errors.hpp"
#include "divgraph/polynomial.hpp"

using namespace divgraph;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(fraction(num(rng), den(rng)));
  return Polynomial(c);
}

}  // namespace

TEST_CASE("division identity a = q b + r with deg r < deg b") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng, 5);
    const Polynomial b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    const auto [q, r] = Polynomial::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd divides both and is monic") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial common = random_poly(rng, 2);
    if (common.is_zero()) continue;
    const Polynomial a = random_poly(rng, 2) * common;
    const Polynomial b = random_poly(rng, 2) * common;
    if (a.is_zero() || b.is_zero()) continue;
    const Polynomial g = Polynomial::gcd(a, b);
    CHECK(g.leading() == 1);
    CHECK(Polynomial::divmod(a, g).second.is_zero());
    CHECK(Polynomial::divmod(b, g).second.is_zero());
    CHECK(g.degree() >= common.degree());
  }
}

TEST_CASE("printing and parsing round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, 4);
    if (p.is_zero()) continue;
    CHECK(parse_polynomial(p.to_string()) == p);
  }
  CHECK(Polynomial(std::vector<Rational>{Rational(2), Rational(1, 2)}).to_string() == "2+x/2");
  CHECK(parse_polynomial("1 - x").to_string() == "1-x");
  CHECK(parse_polynomial("3x^2/2").coeff(2) == Rational(3, 2));
  CHECK_THROWS_AS(parse_polynomial("1+y"), Error);
}

TEST_CASE("rational roots are exactly the roots found by evaluation") {
  // (x - 1/2)(x + 3)(x^2 + 1)
  const Polynomial p = Polynomial(std::vector<Rational>{Rational(-1, 2), Rational(1)}) *
                       Polynomial(std::vector<Rational>{Rational(3), Rational(1)}) *
                       Polynomial(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  auto roots = p.rational_roots();
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-3));
  CHECK(roots[1] == Rational(1, 2));
  for (const auto& r : roots) CHECK(p.evaluate(r) == 0);
}

TEST_CASE("rational functions reduce and track ord") {
  const Polynomial x = Polynomial::x();
  const RationalFunction f(x * x * Polynomial::constant(2), x);
  CHECK(f.is_polynomial());
  CHECK(f.order() == 1);
  CHECK(f.to_string() == "2x");
  const RationalFunction g(Polynomial::constant(1), x);
  CHECK(g.order() == -1);
  CHECK((f * g).order() == 0);
  CHECK((f / f).to_string() == "1");
}
