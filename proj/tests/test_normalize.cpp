#include "pcg/error.hpp"
#include "pcg/normalize.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace pcg;

namespace {

WeightedTree path_tree(const std::vector<Label>& vs, const std::vector<Rational>& w) {
  WeightedTree t;
  for (const auto& v : vs) t.add_vertex(v);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) t.add_edge(i, i + 1, w[i]);
  return t;
}

// Non-singular star with 3 leaves and the given bounds.
Pcr star3(Rational lo, Rational hi) {
  WeightedTree t;
  auto c = t.add_vertex("c");
  for (const char* l : {"a", "b", "d"}) t.add_edge(c, t.add_vertex(l), Rational(3));
  return {t, lo, hi};
}

}  // namespace

TEST_CASE("non-singular input is left alone") {
  auto p = star3(5, 7);
  REQUIRE(is_nonsingular(p));
  auto [q, report] = make_nonsingular(p);
  CHECK(q == p);
  CHECK(report.steps.empty());
}

TEST_CASE("two-leaf tree becomes a subdivided path") {
  Pcr p{path_tree({"u", "v"}, {Rational(1)}), 1, 1};
  auto [q, report] = make_nonsingular(p);
  CHECK(is_nonsingular(q));
  CHECK(q.tree.vertex_count() == 3);
  for (const auto& e : q.tree.edges()) CHECK(e.weight == Rational(1, 2));
  CHECK(q.d_min == Rational(1));
  CHECK(q.d_max == Rational(3, 2));
  CHECK(induced_graph(q) == families::complete({"u", "v"}));
  REQUIRE(report.steps.size() == 2);
  CHECK(report.steps[0].kind == NormalizationStepKind::SubdivideTwoVertex);
  CHECK(report.steps[1].kind == NormalizationStepKind::WidenDmax);
  CHECK(report.steps[1].value == Rational(1, 2));
}

TEST_CASE("zero inner edges are contracted") {
  WeightedTree t;
  auto x = t.add_vertex("x");
  auto y = t.add_vertex("y");
  t.add_edge(x, y, Rational(0));
  for (const char* l : {"a", "b"}) t.add_edge(x, t.add_vertex(l), Rational(1));
  for (const char* l : {"c", "d"}) t.add_edge(y, t.add_vertex(l), Rational(2));
  Pcr p{t, 2, 3};
  auto [q, report] = make_nonsingular(p);
  CHECK(q.tree.vertex_count() == 5);
  CHECK(q.tree.leaf_labels().size() == 4);
  CHECK(induced_graph(q) == induced_graph(p));
  CHECK(report.steps.front().kind == NormalizationStepKind::ShrinkZeroEdges);
}

TEST_CASE("widening uses half the smallest gap above d_max") {
  WeightedTree t;
  auto x = t.add_vertex("x");
  t.add_edge(x, t.add_vertex("a"), Rational(1));
  t.add_edge(x, t.add_vertex("b"), Rational(1));
  t.add_edge(x, t.add_vertex("c"), Rational(2));
  Pcr p{t, 2, 2};
  // leaf distances: ab = 2, ac = bc = 3
  auto [q, report] = make_nonsingular(p);
  CHECK(q.d_max == Rational(5, 2));
  CHECK(induced_graph(q) == induced_graph(p));
}

TEST_CASE("critical alpha") {
  CHECK(critical_alpha(star3(5, 7)) == Rational(6, 7));
  CHECK(critical_alpha(star3(1, 2)) == Rational(3, 4));
  auto near = critical_alpha(star3(99, 100));
  CHECK(near == Rational(199, 200));
  CHECK(near < Rational(1));
  CHECK_THROWS_AS(critical_alpha(star3(2, 2)), PreconditionError);
}

TEST_CASE("normalizing (5,7) at alpha 9/10") {
  auto p = star3(5, 7);
  auto [q, report] = make_normalized(p, Rational(9, 10));
  REQUIRE(report.steps.size() == 2);
  CHECK(report.steps[0].kind == NormalizationStepKind::AddDelta);
  CHECK(report.steps[0].value == Rational(13));
  CHECK(report.steps[1].kind == NormalizationStepKind::Scale);
  CHECK(report.steps[1].value == Rational(1, 20));
  for (const auto& e : q.tree.edges()) CHECK(e.weight == (Rational(3) + Rational(13, 2)) / Rational(20));
  CHECK(q.d_min == Rational(9, 10));
  CHECK(q.d_max == Rational(1));
  CHECK(is_normalized(q));
  CHECK(induced_graph(q) == induced_graph(p));
  CHECK_THROWS_AS(make_normalized(p, Rational(6, 7)), PreconditionError);
  CHECK_THROWS_AS(make_normalized(p, Rational(1)), PreconditionError);
}

TEST_CASE("normalizing a K2 witness with automatic alpha") {
  Pcr p{path_tree({"u", "x", "v"}, {Rational(1, 2), Rational(1, 2)}), 1, 1};
  auto [q, report] = make_normalized(p);
  CHECK(is_normalized(q));
  CHECK(q.d_max == Rational(1));
  CHECK(q.d_min == Rational(11, 12));
  for (auto l : q.tree.leaves()) {
    for (auto e : q.tree.incident(l)) CHECK(q.tree.edge(e).weight > Rational(1, 4));
  }
  CHECK(induced_graph(q) == families::complete({"u", "v"}));
  CHECK(replay_normalization(p, report) == q);
}

TEST_CASE("normalization preserves the induced graph") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = testing::random_pcr(rng, testing::labels("l", testing::uniform(rng, 2, 8)), 0.3);
    auto [q, report] = make_normalized(p);
    CHECK(is_normalized(q));
    CHECK(induced_graph(q) == induced_graph(p));
    CHECK(replay_normalization(p, report) == q);
    CHECK(ensure_normalized(q) == q);
    auto j = report_to_json(report);
    CHECK(j["steps"].is_array());
  }
}

TEST_CASE("single-leaf inputs cannot be made non-singular") {
  CHECK_THROWS_AS(make_nonsingular(single_vertex_pcr("a")), PreconditionError);
}
