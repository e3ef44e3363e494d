#include <doctest.h>

#include <numeric>
#include <set>

#include "divgraph/errors.hpp"
#include "divgraph/models.hpp"

using namespace divgraph;

namespace {

/// Members of the numerical monoid below limit, by dynamic programming over
/// the generators.
std::vector<bool> reachable(const std::vector<long>& gens, long limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
  in[0] = true;
  for (long n = 1; n <= limit; ++n) {
    for (long g : gens) {
      if (g <= n && in[static_cast<std::size_t>(n - g)]) in[static_cast<std::size_t>(n)] = true;
    }
  }
  return in;
}

Element value_element(const ValueModel& m, std::initializer_list<Rational> coords) {
  return m.from_value(Value(coords));
}

WindowSpec spec(const std::string& id, std::map<std::string, Rational> bounds,
                bool fractional = false) {
  return WindowSpec{id, std::move(bounds), fractional, {}};
}

/// Group axioms that every model must satisfy on the given elements.
void check_group_laws(const DivisibilityModel& m, const std::vector<Element>& elems) {
  for (const auto& a : elems) {
    CHECK(m.product(a, m.unit()) == a);
    CHECK(m.quotient(a, a) == m.unit());
    CHECK(m.parse_element(a.label()) == a);
    for (const auto& b : elems) {
      const Element q = m.quotient(a, b);
      CHECK(m.product(q, b) == a);
      CHECK(m.product(a, b) == m.product(b, a));
      CHECK(m.divides(b, a) == m.is_integral(q));
    }
  }
}

}  // namespace

TEST_CASE("numerical monoid membership matches dynamic programming") {
  const std::vector<std::vector<long>> cases{{2, 3}, {3, 5, 7}, {4, 6}, {6, 9, 20}, {5, 7}};
  for (const auto& gens : cases) {
    std::vector<Integer> g(gens.begin(), gens.end());
    NumericalMonoidModel m(g);
    const auto in = reachable(gens, 200);
    for (long n = 0; n <= 200; ++n) {
      CHECK_MESSAGE(m.in_monoid(Value{Rational(n)}) == in[static_cast<std::size_t>(n)],
                    "n = " << n);
    }
  }
}

TEST_CASE("numerical atoms are the elements with no two-part decomposition") {
  const std::vector<long> gens{3, 5, 7, 9, 10};
  NumericalMonoidModel m(std::vector<Integer>(gens.begin(), gens.end()));
  const auto in = reachable(gens, 60);
  std::vector<Integer> expected;
  for (long n = 1; n <= 60; ++n) {
    if (!in[static_cast<std::size_t>(n)]) continue;
    bool split = false;
    for (long a = 1; a < n; ++a) {
      if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(n - a)]) split = true;
    }
    CHECK(m.is_atom(value_element(m, {Rational(n)})) == !split);
    if (!split) expected.emplace_back(n);
  }
  CHECK(m.minimal_generators() == expected);
}

TEST_CASE("numerical factorizations of 6 in <2,3>") {
  NumericalMonoidModel m({2, 3});
  const auto set = m.factorizations(m.parse_element("6"), 10);
  std::set<std::vector<std::string>> found;
  for (const auto& f : set.factorizations) {
    std::vector<std::string> labels;
    for (const auto& a : f.atoms) labels.push_back(a.label());
    found.insert(labels);
  }
  CHECK(found == std::set<std::vector<std::string>>{{"2", "2", "2"}, {"3", "3"}});
  CHECK_FALSE(set.bound_too_small);
  const auto short_search = m.factorizations(m.parse_element("8"), 2);
  CHECK(short_search.factorizations.empty());
  CHECK(short_search.bound_too_small);
}

TEST_CASE("group laws on every value model") {
  DvrModel dvr;
  check_group_laws(dvr, dvr.enumerate_window(spec("dvr", {{"max_exponent", 4}}, true)));
  NumericalMonoidModel n23({2, 3});
  check_group_laws(n23, n23.enumerate_window(spec("numerical", {{"max_value", 9}}, true)));
  AntimatterModel am;
  check_group_laws(am, am.enumerate_window(spec("antimatter", {{"max_value", 1}, {"max_den", 3}}, true)));
  RankTwoModel d1(RankTwoModel::Variant::Rational);
  check_group_laws(d1, d1.enumerate_window(
                           spec("d1", {{"max_k", 2}, {"max_abs", 1}, {"max_den", 2}}, true)));
  RankTwoModel d2(RankTwoModel::Variant::Integer);
  check_group_laws(d2, d2.enumerate_window(spec("d2", {{"max_k", 2}, {"max_abs", 2}}, true)));
}

TEST_CASE("DVR elements") {
  DvrModel m;
  const auto w = m.enumerate_window(spec("dvr", {{"max_exponent", 3}}));
  REQUIRE(w.size() == 3);
  CHECK(w[0].label() == "pi");
  CHECK(w[2].label() == "pi^3");
  CHECK(m.is_atom(w[0]));
  CHECK_FALSE(m.is_atom(w[1]));
  CHECK(m.is_atomic_element(w[2]));
  CHECK(m.parse_element("1/pi^2").value() == Value{Rational(-2)});
  const auto probe = m.atom_successors(w[2], false);
  REQUIRE(probe.successors.size() == 1);
  CHECK(probe.successors[0] == w[1]);
}

TEST_CASE("antimatter window size equals the Farey count") {
  AntimatterModel m;
  std::size_t expected = 0;
  for (long q = 1; q <= 5; ++q) {
    for (long p = 1; p <= 2 * q; ++p) {
      if (std::gcd(p, q) == 1) ++expected;
    }
  }
  const auto w = m.enumerate_window(spec("antimatter", {{"max_value", 2}, {"max_den", 5}}));
  CHECK(w.size() == expected);
  CHECK(expected == 20);
  for (const auto& a : w) {
    CHECK_FALSE(m.is_atom(a));
    CHECK_FALSE(m.is_atomic_element(a));
  }
  CHECK(m.flags().antimatter);
  CHECK(m.atom_elements()->empty());
}

TEST_CASE("D1 values, atoms and the quasi atomic multiplier") {
  RankTwoModel m(RankTwoModel::Variant::Rational);
  const Element y = m.parse_element("y");
  const Element half = m.parse_element("x^(1/2)");
  const Element odd = m.parse_element("y^3/x^(1/3)");
  CHECK(odd.value() == Value{Rational(3), Rational(-1, 3)});
  CHECK(half.label() == "x^(1/2)");
  CHECK(m.is_atom(y));
  CHECK_FALSE(m.is_atom(half));
  CHECK_FALSE(m.is_atomic_element(half));
  CHECK(m.is_atomic_element(value_element(m, {Rational(2), Rational(0)})));
  CHECK_FALSE(m.is_atomic_element(odd));
  CHECK(m.quotient(odd, half).value() == Value{Rational(3), Rational(-5, 6)});
  const auto g = m.quasi_atomic_multiplier(odd);
  REQUIRE(g);
  CHECK(g->value() == Value{Rational(2), Rational(1, 3)});
  CHECK(m.is_atomic_element(m.product(odd, *g)));
  // The printed window from the small D1 example: k <= 2, |a| <= 1, den <= 3.
  const auto w = m.enumerate_window(spec("d1", {{"max_k", 2}, {"max_abs", 1}, {"max_den", 3}}));
  std::size_t expected = 0;
  for (int k = 0; k <= 2; ++k) {
    for (int q = 1; q <= 3; ++q) {
      for (int p = -q; p <= q; ++p) {
        if (std::gcd(p, q) != 1 && p != 0) continue;
        if (p == 0 && q != 1) continue;
        if (k <= 1 && p < 0) continue;
        if (k == 0 && p == 0) continue;
        ++expected;
      }
    }
  }
  CHECK(w.size() == expected);
}

TEST_CASE("D2 atoms and the non-atomic element y^2/x") {
  RankTwoModel m(RankTwoModel::Variant::Integer);
  const Element w = m.parse_element("y^2/x");
  CHECK(w.value() == Value{Rational(2), Rational(-1)});
  CHECK(m.is_integral(w));
  CHECK_FALSE(m.is_atom(w));
  CHECK_FALSE(m.is_atomic_element(w));
  CHECK(m.is_atom(m.parse_element("x")));
  CHECK(m.is_atom(m.parse_element("y")));
  CHECK(m.atom_elements()->size() == 2);
  CHECK_THROWS_AS(m.parse_element("x^(1/2)"), Error);
}

TEST_CASE("Z + xQ[x] atoms and unique factorization") {
  ZxqModel m;
  CHECK(m.is_atom(m.parse_element("2")));
  CHECK(m.is_atom(m.parse_element("1+x")));
  CHECK(m.is_atom(m.parse_element("1+2x")));
  CHECK(m.is_atom(m.parse_element("1+x^2")));
  CHECK_FALSE(m.is_atom(m.parse_element("3+x")));
  CHECK_FALSE(m.is_atom(m.parse_element("1+2x+x^2")));
  CHECK_FALSE(m.is_atom(m.parse_element("x")));
  CHECK_FALSE(m.is_atom(m.parse_element("2x")));
  CHECK(m.is_integral(m.parse_element("x/2")));
  CHECK_FALSE(m.is_integral(m.parse_element("1/2")));
  CHECK(m.order_of(m.parse_element("x^2/3")) == 2);

  const auto atoms = m.atomic_factorization(m.parse_element("6+6x"));
  std::vector<std::string> labels;
  for (const auto& a : atoms) labels.push_back(a.label());
  CHECK(labels == std::vector<std::string>{"1+x", "2", "3"});
  const auto set = m.factorizations(m.parse_element("6+6x"), 5);
  CHECK(set.factorizations.size() == 1);

  CHECK_THROWS_AS(m.is_atom(m.parse_element("1+x^4")), Error);
  ZxqModel declared("zxq", {parse_polynomial("1+x^4")});
  CHECK(declared.is_atom(declared.parse_element("1+x^4")));
  CHECK(m.atom_successors(m.parse_element("x"), false).unbounded);
}

TEST_CASE("model errors") {
  NumericalMonoidModel a({2, 3});
  NumericalMonoidModel b({2, 3});
  CHECK_THROWS_AS(a.is_atom(b.parse_element("2")), Error);
  try {
    a.is_atom(b.parse_element("2"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ElementForeignToModel);
  }

  NumericalMonoidModel loose({2, 3}, "loose", ModelFlags{false, false});
  try {
    loose.is_atomic_element(loose.parse_element("7"));
    FAIL("expected UndecidableWithoutBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UndecidableWithoutBound);
  }
  CHECK(loose.is_atomic_element(loose.parse_element("7"), 10));

  NumericalMonoidModel gap({5, 7});
  try {
    gap.enumerate_window(spec("numerical", {{"max_value", 4}}));
    FAIL("expected EmptyWindow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyWindow);
  }
  try {
    gap.enumerate_window(spec("dvr", {{"max_value", 20}}));
    FAIL("expected ModelMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelMismatch);
  }
  try {
    gap.enumerate_window(spec("numerical", {{"max_value", -1}}));
    FAIL("expected InvalidBounds");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBounds);
  }
}

TEST_CASE("factory builds each kind and rejects unknown ones") {
  for (const auto& kind : known_model_kinds()) {
    ModelDefinition def{kind, "", {}, {}, {}, {}, std::nullopt};
    if (kind == "numerical") def.generators = {Value{Rational(2)}, Value{Rational(3)}};
    CHECK(make_model(def)->kind() == kind);
  }
  try {
    make_model(ModelDefinition{"noetherian-magic", "", {}, {}, {}, {}, std::nullopt});
    FAIL("expected UnknownModelKind");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownModelKind);
  }
  CHECK_THROWS_AS(
      make_model(ModelDefinition{"numerical", "", {Value{Rational(1, 2)}}, {}, {}, {}, std::nullopt}),
      Error);
}
