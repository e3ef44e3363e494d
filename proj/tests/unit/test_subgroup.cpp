#include <doctest.h>

#include <random>

#include "divgraph/subgroup.hpp"

using namespace divgraph;

namespace {

/// Exhaustive search for integer coefficients |c_i| <= bound with
/// sum c_i g_i = target.
bool brute_member(const std::vector<Value>& gens, const Value& target, int bound) {
  std::vector<int> c(gens.size(), -bound);
  while (true) {
    Value sum = Value::zero(target.dimension());
    for (std::size_t i = 0; i < gens.size(); ++i) sum += Integer(c[i]) * gens[i];
    if (sum == target) return true;
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) return false;
    ++c[i];
  }
}

Value combine(const std::vector<Value>& gens, const std::vector<Integer>& c, std::size_t dim) {
  Value sum = Value::zero(dim);
  for (std::size_t i = 0; i < gens.size(); ++i) sum += c[i] * gens[i];
  return sum;
}

}  // namespace

TEST_CASE("atom subgroups of the rank two models") {
  SubgroupDescriptor d1({1, true}, {Value{Rational(1), Rational(0)}});
  CHECK(d1.describe() == "Z*(1, 0)");
  const Membership three = d1.membership(Value{Rational(3), Rational(0)});
  CHECK(three.member);
  CHECK(three.coefficients == std::vector<Integer>{3});
  CHECK_FALSE(d1.membership(Value{Rational(3), Rational(-5, 6)}).member);

  SubgroupDescriptor d2({2, false}, {Value{Rational(0), Rational(1)}, Value{Rational(1), Rational(0)}});
  CHECK(d2.is_full());
  const Membership m = d2.membership(Value{Rational(2), Rational(-1)});
  CHECK(m.member);
  CHECK(m.coefficients == std::vector<Integer>{-1, 2});

  SubgroupDescriptor z({1, false}, {Value{Rational(2)}, Value{Rational(3)}});
  CHECK(z.is_full());
  CHECK(z.describe() == "Z");
}

TEST_CASE("membership agrees with exhaustive coefficient search") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const bool rational = trial % 2 == 0;
    const ValueGroup ambient{rational ? 1u : 2u, rational};
    std::vector<Value> gens;
    const int count = 1 + trial % 3;
    for (int i = 0; i < count; ++i) {
      gens.push_back(Value{Rational(small(rng)), rational ? fraction(small(rng), den(rng))
                                                          : Rational(small(rng))});
    }
    SubgroupDescriptor h(ambient, gens);
    for (int t = 0; t < 15; ++t) {
      const Value target{Rational(small(rng)),
                         rational ? fraction(small(rng), den(rng)) : Rational(small(rng))};
      const Membership m = h.membership(target);
      const bool brute = brute_member(gens, target, 4);
      // Brute force with bounded coefficients can only miss members.
      if (brute) CHECK(m.member);
      if (m.member) {
        CHECK(combine(gens, m.coefficients, 2) == target);
      }
    }
  }
}

TEST_CASE("coset labels are equal exactly for members of the difference") {
  SubgroupDescriptor h({1, true}, {Value{Rational(2), Rational(1, 2)}, Value{Rational(0), Rational(1, 3)}});
  std::vector<Value> points;
  for (int k = -2; k <= 2; ++k) {
    for (int p = -3; p <= 3; ++p) points.push_back(Value{Rational(k), fraction(p, 6)});
  }
  for (const auto& a : points) {
    for (const auto& b : points) {
      CHECK((h.coset_label(a) == h.coset_label(b)) == h.membership(a - b).member);
    }
  }
}

TEST_CASE("kernel relations keep coefficients small") {
  SubgroupDescriptor h({1, false}, {Value{Rational(2)}, Value{Rational(3)}});
  const Membership m = h.membership(Value{Rational(2)});
  REQUIRE(m.member);
  CHECK(m.coefficients == std::vector<Integer>{1, 0});
  CHECK(h.membership(Value{Rational(38)}).coefficients == std::vector<Integer>{1, 12});
}

TEST_CASE("trivial subgroup") {
  SubgroupDescriptor h({0, true}, {});
  CHECK(h.is_trivial());
  CHECK(h.describe() == "0");
  CHECK(h.membership(Value::zero(1)).member);
  CHECK_FALSE(h.membership(Value{Rational(1, 2)}).member);
}
