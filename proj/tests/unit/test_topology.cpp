#include <doctest.h>

#include <random>

#include "divgraph/connectivity.hpp"
#include "divgraph/errors.hpp"
#include "divgraph/models.hpp"
#include "divgraph/topology.hpp"

using namespace divgraph;

namespace {

FinitePoset chain3() {
  return FinitePoset{{"a", "b", "c"},
                     {{true, true, true}, {false, true, true}, {false, false, true}}};
}

/// Random order: a random relation on a shuffled index order, closed under
/// transitivity.
FinitePoset random_poset(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::shuffle(rank.begin(), rank.end(), rng);
  std::bernoulli_distribution edge(0.15);
  FinitePoset p;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    p.points.push_back("p" + std::to_string(i));
    p.leq[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (rank[i] < rank[j] && edge(rng)) p.leq[i][j] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (p.leq[i][k] && p.leq[k][j]) p.leq[i][j] = true;
      }
    }
  }
  return p;
}

std::vector<std::string> names(const AlexandrovSpace& s, std::size_t i) {
  std::vector<std::string> out;
  for (std::size_t j : s.min_open[i]) out.push_back(s.points[j]);
  return out;
}

}  // namespace

TEST_CASE("three-chain minimal open sets and round trip") {
  const AlexandrovSpace s = poset_to_space(chain3());
  CHECK(names(s, 2) == std::vector<std::string>{"a", "b", "c"});
  CHECK(names(s, 0) == std::vector<std::string>{"a"});
  CHECK(is_T0(s));
  CHECK(is_basis_coherent(s));
  CHECK(space_to_poset(s) == chain3());
  CHECK(connected_components_topology(s).count() == 1);
}

TEST_CASE("antichain is discrete") {
  FinitePoset p{{"u", "v", "w"}, {{true, false, false}, {false, true, false}, {false, false, true}}};
  const AlexandrovSpace s = poset_to_space(p);
  for (std::size_t i = 0; i < 3; ++i) CHECK(s.min_open[i] == std::vector<std::size_t>{i});
  CHECK(connected_components_topology(s).count() == 3);
  CHECK_FALSE(chain_connected(s, 0, 1));
}

TEST_CASE("equal minimal open sets are not T0") {
  const AlexandrovSpace s{{"a", "b"}, {{0, 1}, {0, 1}}};
  CHECK_FALSE(is_T0(s));
  try {
    space_to_poset(s);
    FAIL("expected NotT0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotT0);
  }
}

TEST_CASE("random posets survive the round trip") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const FinitePoset p = random_poset(rng, 1 + static_cast<std::size_t>(trial % 30));
    REQUIRE(p.valid());
    const AlexandrovSpace s = poset_to_space(p);
    CHECK(is_basis_coherent(s));
    CHECK(is_T0(s));
    CHECK(space_to_poset(s) == p);
    // Components via DSU agree with the chain criterion.
    const Partition c = connected_components_topology(s);
    for (std::size_t a = 0; a < s.size(); a += 3) {
      for (std::size_t b = 0; b < s.size(); b += 2) {
        CHECK(c.same(a, b) == chain_connected(s, a, b));
      }
    }
  }
}

TEST_CASE("divisibility window spaces") {
  NumericalMonoidModel m({2, 3});
  std::vector<Element> w;
  for (int n = 2; n <= 9; ++n) w.push_back(m.parse_element(std::to_string(n)));
  const DivGraph g = build_graph(m, w);
  const FinitePoset p = window_poset(m, g);
  CHECK(p == serial::window_poset(m, g));
  CHECK(p.valid());
  const AlexandrovSpace s = poset_to_space(p);
  // M(4) = {x : x - 4 in M \ {0}} plus 4 itself.
  std::vector<std::string> expected;
  for (int x = 2; x <= 9; ++x) {
    const int d = x - 4;
    if (d == 0 || d == 2 || d >= 3) expected.push_back(std::to_string(x));
  }
  CHECK(names(s, s.index_of("4")) == expected);
  CHECK(expected == std::vector<std::string>{"4", "6", "7", "8", "9"});
  CHECK(is_T0(s));

  DvrModel dvr;
  const DivGraph gd = build_graph(dvr, dvr.enumerate_window({"dvr", {{"max_exponent", 5}}, false, {}}));
  const AlexandrovSpace sd = poset_to_space(window_poset(dvr, gd));
  CHECK(chain_connected(sd, sd.index_of("pi^3"), sd.index_of("pi")));

  AntimatterModel am;
  const DivGraph ga = build_graph(am, am.enumerate_window({"antimatter", {{"max_value", 1}, {"max_den", 3}}, false, {}}));
  const AlexandrovSpace sa = poset_to_space(window_poset(am, ga));
  CHECK_FALSE(chain_connected(sa, sa.index_of("x^(1/2)"), sa.index_of("x^(1/3)")));
  CHECK(connected_components_topology(sa).count() == sa.size());

  ZxqModel z;
  const DivGraph gz = build_graph(
      z, z.enumerate_window({"zxq", {{"max_ord", 2}, {"max_num", 3}, {"max_den", 2}, {"max_degree", 3}}, false, {}}));
  const AlexandrovSpace sz = poset_to_space(window_poset(z, gz));
  CHECK_FALSE(chain_connected(sz, sz.index_of("x"), sz.index_of("x^2")));
  CHECK(connected_components_topology(sz) == weak_components(gz));
}
