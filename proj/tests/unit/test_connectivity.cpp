#include <doctest.h>

#include "divgraph/connectivity.hpp"
#include "divgraph/errors.hpp"
#include "divgraph/models.hpp"

using namespace divgraph;

namespace {

std::vector<std::string> labels(const std::vector<Element>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.label());
  return out;
}

const WindowSpec kD1{"d1", {{"max_k", 2}, {"max_abs", 1}, {"max_den", 3}}, false, {}};
const WindowSpec kD2{"d2", {{"max_k", 3}, {"max_abs", 2}}, false, {}};
const WindowSpec kZxq{"zxq", {{"max_ord", 2}, {"max_num", 3}, {"max_den", 2}, {"max_degree", 3}}, false, {}};

}  // namespace

TEST_CASE("weak components") {
  DvrModel dvr;
  CHECK(weak_components(build_graph(dvr, dvr.enumerate_window({"dvr", {{"max_exponent", 6}}, false, {}})))
            .count() == 1);

  RankTwoModel d2(RankTwoModel::Variant::Integer);
  CHECK(weak_components(build_graph(d2, d2.enumerate_window(kD2))).count() == 1);

  ZxqModel z;
  const auto w = z.enumerate_window(kZxq);
  const Partition p = weak_components(build_graph(z, w));
  // Same component iff same ord.
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      CHECK(p.same(i, j) == (z.order_of(w[i]) == z.order_of(w[j])));
    }
  }
  CHECK(p.count() == 3);
}

TEST_CASE("atom subgroups") {
  RankTwoModel d1(RankTwoModel::Variant::Rational);
  const AtomSubgroup s1 = atom_subgroup(d1);
  CHECK(s1.descriptor.describe() == "Z*(1, 0)");
  RankTwoModel d2(RankTwoModel::Variant::Integer);
  CHECK(atom_subgroup(d2).descriptor.is_full());
  NumericalMonoidModel n({2, 3});
  CHECK(atom_subgroup(n).descriptor.describe() == "Z");
  AntimatterModel am;
  const AtomSubgroup none = atom_subgroup(am);
  CHECK(none.no_atoms);
  CHECK(none.descriptor.is_trivial());
}

TEST_CASE("component labels in D1 and D2") {
  RankTwoModel d1(RankTwoModel::Variant::Rational);
  const Element half = d1.parse_element("x^(1/2)");
  const Element odd = d1.parse_element("y^3/x^(1/3)");
  CHECK(component_label(d1, half) == "(0, 1/2)");
  CHECK(component_label(d1, odd) == "(0, -1/3)");
  CHECK(component_label(d1, half) != component_label(d1, odd));
  CHECK(component_label(d1, odd) == component_label(d1, d1.parse_element("x^(-1/3)*y")));

  RankTwoModel d2(RankTwoModel::Variant::Integer);
  const auto w = d2.enumerate_window(kD2);
  for (const auto& a : w) CHECK(component_label(d2, a) == component_label(d2, w.front()));
}

TEST_CASE("quotients of atomic elements") {
  DvrModel dvr;
  const Verdict v = quotient_of_atomics(dvr, dvr.parse_element("pi^3"), dvr.parse_element("pi"), 10);
  REQUIRE(v.holds());
  const auto& c = std::get<Certificate>(v.evidence);
  CHECK(labels(c.numerator_atoms) == std::vector<std::string>{"pi", "pi"});
  CHECK(c.denominator_atoms.empty());

  RankTwoModel d1(RankTwoModel::Variant::Rational);
  CHECK(quotient_of_atomics(d1, d1.parse_element("y^3/x^(1/3)"), d1.parse_element("x^(1/2)"), 10)
            .fails());

  NumericalMonoidModel n({2, 3});
  const Verdict q = quotient_of_atomics(n, n.parse_element("7"), n.parse_element("5"), 10);
  REQUIRE(q.holds());
  const auto& qc = std::get<Certificate>(q.evidence);
  Rational sum = 0;
  for (const auto& a : qc.numerator_atoms) sum += a.value()[0];
  for (const auto& a : qc.denominator_atoms) sum -= a.value()[0];
  CHECK(sum == 2);
  CHECK(quotient_of_atomics(n, n.parse_element("40"), n.parse_element("2"), 3).status ==
        Status::Inconclusive);

  ZxqModel z;
  const Verdict zq = quotient_of_atomics(z, z.parse_element("3x/2"), z.parse_element("x+x^2"), 10);
  REQUIRE(zq.holds());
  const auto& zc = std::get<Certificate>(zq.evidence);
  CHECK(labels(zc.numerator_atoms) == std::vector<std::string>{"3"});
  CHECK(labels(zc.denominator_atoms) == std::vector<std::string>{"1+x", "2"});
  CHECK(quotient_of_atomics(z, z.parse_element("x"), z.parse_element("x^2"), 10).fails());
}

TEST_CASE("almost and quasi atomicity") {
  RankTwoModel d1(RankTwoModel::Variant::Rational);
  const auto w1 = d1.enumerate_window(kD1);
  const Verdict a1 = is_almost_atomic(d1, w1, 8);
  REQUIRE(a1.fails());
  CHECK(a1.witness().element.value()[0] == 0);
  const Verdict q1 = is_quasi_atomic(d1, w1, 8);
  REQUIRE(q1.holds());
  for (const auto& c : std::get<WindowCertificate>(q1.evidence).elements) {
    REQUIRE(c.multiplier);
    CHECK(c.multiplier->value() == Value{Rational(2), -c.element.value()[1]});
    CHECK(c.product.value()[1] == 0);
  }

  RankTwoModel d2(RankTwoModel::Variant::Integer);
  const auto w2 = d2.enumerate_window(kD2);
  const Verdict a2 = is_almost_atomic(d2, w2, 8);
  REQUIRE(a2.holds());
  for (const auto& c : std::get<WindowCertificate>(a2.evidence).elements) {
    CHECK(d2.is_atomic_element(c.product));
  }
  CHECK(is_quasi_atomic(d2, w2, 8).holds());

  NumericalMonoidModel n({2, 3});
  const auto wn = n.enumerate_window({"numerical", {{"max_value", 12}}, false, {}});
  const Verdict an = is_almost_atomic(n, wn, 4);
  REQUIRE(an.holds());
  for (const auto& c : std::get<WindowCertificate>(an.evidence).elements) CHECK(c.atoms.empty());

  ZxqModel z;
  const auto wz = z.enumerate_window(kZxq);
  CHECK(is_almost_atomic(z, wz, 4).fails());
  CHECK(is_quasi_atomic(z, wz, 4).fails());

  AntimatterModel am;
  const auto wa = am.enumerate_window({"antimatter", {{"max_value", 2}, {"max_den", 5}}, false, {}});
  CHECK(is_almost_atomic(am, wa, 4).fails());
  CHECK(is_quasi_atomic(am, wa, 4).fails());
}

TEST_CASE("parallel and serial atomicity checks agree") {
  RankTwoModel d2(RankTwoModel::Variant::Integer);
  const auto w = d2.enumerate_window(kD2);
  const Verdict p = is_almost_atomic(d2, w, 8);
  const Verdict s = serial::is_almost_atomic(d2, w, 8);
  CHECK(p.status == s.status);
  const auto& pe = std::get<WindowCertificate>(p.evidence).elements;
  const auto& se = std::get<WindowCertificate>(s.evidence).elements;
  REQUIRE(pe.size() == se.size());
  for (std::size_t i = 0; i < pe.size(); ++i) {
    CHECK(pe[i].element == se[i].element);
    CHECK(labels(pe[i].atoms) == labels(se[i].atoms));
  }
  RankTwoModel d1(RankTwoModel::Variant::Rational);
  const auto w1 = d1.enumerate_window(kD1);
  CHECK(is_quasi_atomic(d1, w1, 8).status == serial::is_quasi_atomic(d1, w1, 8).status);
  CHECK(is_almost_atomic(d1, w1, 8).witness().element ==
        serial::is_almost_atomic(d1, w1, 8).witness().element);
}

TEST_CASE("prime ideal check in Z + xQ[x]") {
  ZxqModel z;
  const auto w = z.enumerate_window(kZxq);
  const PrimeWitnessReport r = prime_witness_check_zxq(z, w);
  CHECK(r.holds);
  CHECK(r.violations.empty());
  const auto ideal = labels(r.ideal_elements);
  CHECK(std::find(ideal.begin(), ideal.end(), "2x") != ideal.end());
  const auto atoms = labels(r.atoms);
  CHECK(std::find(atoms.begin(), atoms.end(), "3") != atoms.end());
  CHECK(std::find(ideal.begin(), ideal.end(), "3") == ideal.end());

  DvrModel dvr;
  try {
    prime_witness_check_zxq(dvr, dvr.enumerate_window({"dvr", {{"max_exponent", 2}}, false, {}}));
    FAIL("expected ModelMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelMismatch);
  }
}
