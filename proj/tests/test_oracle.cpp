#include "pcg/cycle_cache.hpp"
#include "pcg/linear_feasibility.hpp"
#include "pcg/oracle.hpp"
#include "pcg/topology.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <set>

using namespace pcg;

TEST_CASE("topology counts follow the double factorial") {
  CHECK(topology_count(3) == 1);
  CHECK(topology_count(4) == 3);
  CHECK(topology_count(5) == 15);
  CHECK(topology_count(7) == 945);
  for (std::size_t n = 3; n <= 7; ++n) {
    auto all = enumerate_topologies(n);
    CHECK(all.size() == topology_count(n));
    std::set<std::string> codes;
    for (const auto& t : all) {
      codes.insert(t.canonical_code());
      CHECK(t.edges.size() == 2 * n - 3);
      std::vector<int> degree(t.vertex_count());
      for (auto [u, v] : t.edges) {
        ++degree.at(u);
        ++degree.at(v);
      }
      for (std::size_t v = 0; v < t.vertex_count(); ++v) CHECK(degree[v] == (v < n ? 1 : 3));
    }
    CHECK(codes.size() == all.size());
  }
}

TEST_CASE("exact feasibility") {
  // x + y <= 2, -x <= -1, -y <= -1  -> x = y = 1
  std::vector<LinearConstraint> rows{{{1, 1}, 2}, {{-1, 0}, -1}, {{0, -1}, -1}};
  auto x = find_feasible_point(2, rows);
  REQUIRE(x);
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(1));
  rows.push_back({{1, 0}, Rational(1, 2)});
  CHECK_FALSE(find_feasible_point(2, rows));
  CHECK(find_feasible_point(3, {}));
  // x >= 1/3 exactly reachable
  auto y = find_feasible_point(1, {{{-3}, -1}});
  REQUIRE(y);
  CHECK((*y)[0] >= Rational(1, 3));
}

TEST_CASE("random feasibility problems agree with their planted points") {
  testing::Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = testing::uniform(rng, 1, 5);
    std::vector<Rational> planted;
    for (std::size_t i = 0; i < n; ++i) planted.push_back(Rational(static_cast<std::int64_t>(testing::uniform(rng, 0, 8)), 2));
    std::vector<LinearConstraint> rows;
    for (std::size_t r = 0; r < testing::uniform(rng, 1, 8); ++r) {
      LinearConstraint c;
      Rational lhs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        c.coeffs.push_back(Rational(static_cast<std::int64_t>(testing::uniform(rng, 0, 6)) - 3));
        lhs += c.coeffs.back() * planted[i];
      }
      c.bound = lhs + Rational(static_cast<std::int64_t>(testing::uniform(rng, 0, 2)));
      rows.push_back(c);
    }
    auto x = find_feasible_point(n, rows);
    REQUIRE(x);
    for (const auto& c : rows) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        CHECK((*x)[i].sign() >= 0);
        lhs += c.coeffs[i] * (*x)[i];
      }
      CHECK(lhs <= c.bound);
    }
  }
}

TEST_CASE("solve_topology on fixed cases") {
  auto dl = families::default_labels;
  SUBCASE("C4 is feasible on some 4-leaf topology") {
    auto c4 = families::cycle(dl(4));
    int feasible = 0;
    for (const auto& t : enumerate_topologies(4)) {
      if (auto w = solve_topology(t, c4)) {
        CHECK(verify(*w, c4));
        ++feasible;
      }
    }
    CHECK(feasible >= 1);
  }
  SUBCASE("cliques and empty graphs are feasible everywhere") {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (const auto& t : enumerate_topologies(n)) {
        auto k = solve_topology(t, families::complete(dl(n)));
        REQUIRE(k);
        CHECK(verify(*k, families::complete(dl(n))));
        auto e = solve_topology(t, families::empty(dl(n)));
        REQUIRE(e);
        CHECK(verify(*e, families::empty(dl(n))));
      }
    }
  }
}

TEST_CASE("exact search") {
  auto dl = families::default_labels;
  auto one = exact_search(families::complete(dl(1)));
  REQUIRE(one.status == SearchStatus::Pcg);
  CHECK(one.witness->tree.vertex_count() == 1);
  CHECK(one.witness->d_min == Rational(0));
  CHECK(one.witness->d_max == Rational(0));
  auto two = exact_search(families::empty(dl(2)));
  REQUIRE(two.status == SearchStatus::Pcg);
  CHECK(verify(*two.witness, families::empty(dl(2))));
  auto c6 = exact_search(families::cycle(dl(6)));
  REQUIRE(c6.status == SearchStatus::Pcg);
  CHECK(verify(*c6.witness, families::cycle(dl(6))));
  SearchBudget small;
  small.max_n = 5;
  CHECK(exact_search(families::cycle(dl(6)), small).status == SearchStatus::BudgetExceeded);
  SearchBudget none;
  none.max_topologies = 0;
  CHECK(exact_search(families::cycle(dl(5)), none).status == SearchStatus::BudgetExceeded);
  CHECK(to_string(SearchStatus::NonPcg) == "NonPcg");
}

TEST_CASE("parallel search returns the serial witness") {
  auto dl = families::default_labels;
  testing::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = testing::random_graph(rng, dl(6), 0.5);
    SearchBudget serial;
    SearchBudget parallel;
    parallel.jobs = 4;
    auto a = exact_search(g, serial);
    auto b = exact_search(g, parallel);
    CHECK(a.status == b.status);
    CHECK(a.topology_index == b.topology_index);
    if (a.witness && b.witness) CHECK(*a.witness == *b.witness);
  }
}

TEST_CASE("cycle cache") {
  const auto& shared = CycleCache::shared();
  for (std::size_t n = 3; n <= 7; ++n) {
    REQUIRE(shared.contains(n));
    CHECK(verify(shared.witness(n), families::cycle(families::default_labels(n))));
  }
  auto round = CycleCache::from_json(shared.to_json());
  CHECK(round.entries() == shared.entries());
  auto j = shared.to_json();
  j["cycles"]["5"] = j["cycles"]["4"];
  CHECK_THROWS(CycleCache::from_json(j));
  auto k = shared.to_json();
  k["version"] = 99;
  CHECK_THROWS(CycleCache::from_json(k));
  CHECK_THROWS(CycleCache::load("/nonexistent/cache.json"));
  auto fresh = CycleCache::compute(3, 5);
  CHECK(fresh.entries().size() == 3);
}
