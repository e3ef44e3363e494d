#include <doctest.h>

#include <algorithm>
#include <set>

#include "divgraph/errors.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/models.hpp"

using namespace divgraph;

namespace {

std::vector<Element> numbers(const DivisibilityModel& m, long from, long to) {
  std::vector<Element> out;
  for (long n = from; n <= to; ++n) out.push_back(m.parse_element(std::to_string(n)));
  return out;
}

std::set<std::pair<std::string, std::string>> edge_labels(const DivGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : g.edges()) out.emplace(g.vertex(a).label(), g.vertex(b).label());
  return out;
}

std::vector<std::string> labels(const std::vector<Element>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.label());
  return out;
}

}  // namespace

TEST_CASE("<2,3> window {2..7}: edges are differences equal to an atom") {
  NumericalMonoidModel m({2, 3});
  const DivGraph g = build_graph(m, numbers(m, 2, 7));
  // Oracle: a -> b iff a - b is 2 or 3 (both in the window).
  std::set<std::pair<std::string, std::string>> expected;
  for (long a = 2; a <= 7; ++a) {
    for (long b = 2; b <= 7; ++b) {
      if (a - b == 2 || a - b == 3) expected.emplace(std::to_string(a), std::to_string(b));
    }
  }
  CHECK(edge_labels(g) == expected);
  CHECK(expected == std::set<std::pair<std::string, std::string>>{
                        {"4", "2"}, {"5", "2"}, {"5", "3"}, {"6", "3"}, {"6", "4"}, {"7", "4"}, {"7", "5"}});
  CHECK(g.topological_order().has_value());
}

TEST_CASE("interval and down-sets in <2,3>") {
  NumericalMonoidModel m({2, 3});
  const auto universe = numbers(m, 2, 9);
  const auto iv = interval(m, m.parse_element("9"), m.parse_element("2"), universe);
  CHECK(labels(iv) == std::vector<std::string>{"2", "4", "5", "6", "7", "9"});
  CHECK(strictly_below(m, m.parse_element("6"), m.parse_element("4")));
  CHECK_FALSE(strictly_below(m, m.parse_element("5"), m.parse_element("4")));
}

TEST_CASE("DVR window is a chain with one sink") {
  DvrModel m;
  const DivGraph g = build_graph(m, m.enumerate_window({"dvr", {{"max_exponent", 10}}, false, {}}));
  CHECK(g.size() == 10);
  CHECK(g.edges().size() == 9);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.out(i).size() <= 1);
  const SinkReport s = sinks(m, g);
  CHECK(labels(s.sinks) == std::vector<std::string>{"pi"});
  CHECK(s.artifacts.empty());
  const FactorizationReport r = classify(m, g, 64);
  for (const auto& [p, v] : r.verdicts) CHECK_MESSAGE(v.holds(), property_name(p));
}

TEST_CASE("paths from a vertex and their terminals") {
  NumericalMonoidModel m({2, 3});
  const DivGraph g = build_graph(m, numbers(m, 2, 7));
  const PathReport r = paths_from(m, g, m.parse_element("6"), 10);
  CHECK(r.exhaustive);
  std::multiset<std::size_t> lengths;
  for (const auto& p : r.paths) {
    CHECK(p.terminal == TerminalKind::AtomSink);
    lengths.insert(p.edge_count());
  }
  // 6 -> 3, 6 -> 4 -> 2
  CHECK(lengths == std::multiset<std::size_t>{1, 2});
  const PathReport capped = paths_from(m, g, m.parse_element("7"), 1);
  CHECK_FALSE(capped.exhaustive);
  CHECK(std::any_of(capped.paths.begin(), capped.paths.end(),
                    [](const GraphPath& p) { return p.terminal == TerminalKind::LengthCap; }));
}

TEST_CASE("HFD witness in <2,3> is 6 with lengths {2,3}") {
  NumericalMonoidModel m({2, 3});
  const DivGraph g = build_graph(m, numbers(m, 2, 9));
  const FactorizationReport r = classify(m, g, 64);
  const Verdict& hfd = r.verdicts.at(Property::HFD);
  REQUIRE(hfd.fails());
  CHECK(hfd.witness().element.label() == "6");
  CHECK(hfd.witness().lengths == std::vector<std::size_t>{2, 3});
  CHECK(r.verdicts.at(Property::Atomic).holds());
  CHECK(r.verdicts.at(Property::FFD).holds());
}

TEST_CASE("non divisor-closed window escapes through boundary vertices") {
  NumericalMonoidModel m({2, 3});
  // 4 and 6 without 2 or 3: both lose their successors.
  const DivGraph g = build_graph(m, {m.parse_element("6"), m.parse_element("4")});
  CHECK(g.is_boundary(0));
  CHECK(g.is_boundary(1));
  const FactorizationReport r = classify(m, g, 64);
  CHECK(r.verdicts.at(Property::Atomic).status == Status::Inconclusive);
  const PathReport p = paths_from(m, g, m.parse_element("6"), 10);
  CHECK(p.paths.front().terminal == TerminalKind::WindowBoundary);
}

TEST_CASE("D2 atomicity fails with witness y^2/x") {
  RankTwoModel m(RankTwoModel::Variant::Integer);
  const DivGraph g = build_graph(m, m.enumerate_window({"d2", {{"max_k", 3}, {"max_abs", 2}}, false, {}}));
  const Verdict atomic = classify(m, g, 64).verdicts.at(Property::Atomic);
  REQUIRE(atomic.fails());
  CHECK(atomic.witness().element.value() == Value{Rational(2), Rational(-1)});
}

TEST_CASE("antimatter window: no edges and every vertex is a dead end") {
  AntimatterModel m;
  const DivGraph g =
      build_graph(m, m.enumerate_window({"antimatter", {{"max_value", 2}, {"max_den", 5}}, false, {}}));
  CHECK(g.edges().empty());
  CHECK(sinks(m, g).sinks.empty());
  CHECK(classify(m, g, 64).verdicts.at(Property::Atomic).fails());
}

TEST_CASE("parallel and serial graph builders agree") {
  std::vector<std::unique_ptr<DivisibilityModel>> models;
  std::vector<WindowSpec> specs;
  models.push_back(std::make_unique<NumericalMonoidModel>(std::vector<Integer>{3, 5, 7}));
  specs.push_back({"numerical", {{"max_value", 40}}, true, {}});
  models.push_back(std::make_unique<RankTwoModel>(RankTwoModel::Variant::Rational));
  specs.push_back({"d1", {{"max_k", 2}, {"max_abs", 1}, {"max_den", 3}}, true, {}});
  models.push_back(std::make_unique<ZxqModel>());
  specs.push_back({"zxq", {{"max_ord", 2}, {"max_num", 3}, {"max_den", 2}, {"max_degree", 3}}, false, {}});
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto w = models[i]->enumerate_window(specs[i]);
    CHECK(build_graph(*models[i], w) == serial::build_graph(*models[i], w));
  }
}

TEST_CASE("graph construction validates edges") {
  NumericalMonoidModel m({2, 3});
  const auto v = numbers(m, 2, 3);
  CHECK_THROWS_AS(DivGraph(v, {{0, 0}}, {false, false}, false), Error);
  CHECK_THROWS_AS(DivGraph(v, {{0, 1}, {0, 1}}, {false, false}, false), Error);
  const DivGraph cyclic(v, {{0, 1}, {1, 0}}, {false, false}, false);
  CHECK_FALSE(cyclic.topological_order().has_value());
}
