#include "pcg/error.hpp"
#include "pcg/graph.hpp"
#include "pcg/graph_algorithms.hpp"
#include "pcg/graph_io.hpp"
#include "pcg/rational.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace pcg;

TEST_CASE("rationals are exact and print in lowest terms") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("graph6 D?{ matches an independent decoder") {
  auto g = read_graph6("D?{");
  std::size_t n = 0;
  auto expected = testing::decode_graph6_reference("D?{", n);
  REQUIRE(g.size() == 5);
  REQUIRE(n == 5);
  CHECK(g.edge_count() == expected.size());
  for (auto [u, v] : expected) CHECK(g.adjacent(u, v));
  CHECK(g.edge_count() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(g.adjacent(i, 4));
}

TEST_CASE("graph6 round-trips and rejects junk") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = testing::uniform(rng, 0, 70);
    auto g = testing::random_graph(rng, families::default_labels(n), 0.3);
    auto text = write_graph6(g);
    CHECK(read_graph6(text) == g);
    if (n > 0 && n < 63) {
      std::size_t m = 0;
      auto edges = testing::decode_graph6_reference(text, m);
      CHECK(edges.size() == g.edge_count());
    }
  }
  CHECK(read_graph6(">>graph6<<Dhc\n") == families::cycle(families::default_labels(5)));
  CHECK_THROWS_AS(read_graph6("D?"), ParseError);
  CHECK_THROWS_AS(read_graph6("D?{?"), ParseError);
  CHECK_THROWS_AS(read_graph6("D?\x7f"), ParseError);
  CHECK_THROWS_AS(read_graph6(""), ParseError);
  CHECK_THROWS_AS(read_graph6("A@"), ParseError);  // padding bits set
}

TEST_CASE("edge lists") {
  auto g = read_edge_list("a b\nb c");
  CHECK(g == families::path({"a", "b", "c"}));
  auto single = read_edge_list("n=1 labels=a\n");
  CHECK(single.size() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(single.contains("a"));
  auto with_comments = read_edge_list("# comment\nx y\n\n# more\ny z\n");
  CHECK(with_comments.edge_count() == 2);
  CHECK(read_edge_list(write_edge_list(families::petersen())) == families::petersen());
  CHECK_THROWS_AS(read_edge_list("a a\n"), ParseError);
  CHECK_THROWS_AS(read_edge_list("a b c\n"), ParseError);
  CHECK_THROWS_AS(read_edge_list("n=1 labels=a\na b\n"), ParseError);
  CHECK(sniff_format("x.g6", "a b") == GraphFormat::Graph6);
  CHECK(sniff_format("x.txt", ">>graph6<<D?{") == GraphFormat::Graph6);
  CHECK(sniff_format("x.txt", "a b") == GraphFormat::EdgeList);
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), PreconditionError);
  CHECK_THROWS_AS(Graph({"a"}, {{"a", "a"}}), PreconditionError);
  CHECK_THROWS(Graph({"a"}, {{"a", "b"}}));
  Graph dup({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("biconnected components") {
  SUBCASE("two triangles sharing x") {
    Graph g({"a", "b", "x", "c", "d"}, {{"a", "b"}, {"b", "x"}, {"x", "a"}, {"x", "c"}, {"c", "d"}, {"d", "x"}});
    auto blocks = biconnected_components(g);
    REQUIRE(blocks.size() == 2);
    for (const auto& b : blocks) {
      CHECK(b.graph.size() == 3);
      CHECK(b.cut_vertices == std::vector<Label>{"x"});
    }
    CHECK(cut_vertices(g) == std::vector<Label>{"x"});
  }
  SUBCASE("path a-b-c") {
    auto blocks = biconnected_components(families::path({"a", "b", "c"}));
    REQUIRE(blocks.size() == 2);
    for (const auto& b : blocks) {
      CHECK(b.graph.edge_count() == 1);
      CHECK(b.cut_vertices == std::vector<Label>{"b"});
    }
  }
  SUBCASE("4-cycle") {
    auto c4 = families::cycle({"a", "b", "c", "d"});
    auto blocks = biconnected_components(c4);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].graph == c4);
    CHECK(blocks[0].cut_vertices.empty());
  }
  CHECK_THROWS_AS(biconnected_components(families::empty({"a", "b"})), PreconditionError);
}

TEST_CASE("connected components") {
  auto k3 = families::complete({"a", "b", "c"});
  auto k2 = families::complete({"d", "e"});
  auto comps = connected_components(graph_union(k3, k2));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == k3);
  CHECK(comps[1] == k2);
  CHECK(connected_components(families::petersen()).size() == 1);
  auto iso = connected_components(families::empty({"x", "y", "z"}));
  REQUIRE(iso.size() == 3);
  for (const auto& c : iso) CHECK(c.size() == 1);
}

TEST_CASE("twins") {
  auto c4 = find_twins(families::cycle({"a", "b", "c", "d"}));
  CHECK(c4.false_twins == std::vector<LabelPair>{{"a", "c"}, {"b", "d"}});
  CHECK(c4.true_twin_classes.empty());
  auto k4 = find_twins(families::complete({"a", "b", "c", "d"}));
  CHECK(k4.false_twins.empty());
  REQUIRE(k4.true_twin_classes.size() == 1);
  CHECK(k4.true_twin_classes[0].members.size() == 4);
  CHECK(k4.true_twin_classes[0].reducible);
  auto p3 = find_twins(families::path({"a", "b", "c"}));
  CHECK(p3.false_twins == std::vector<LabelPair>{{"a", "c"}});
  auto k2 = find_twins(families::complete({"a", "b"}));
  REQUIRE(k2.true_twin_classes.size() == 1);
  CHECK_FALSE(k2.true_twin_classes[0].reducible);
}

TEST_CASE("base classification") {
  auto dl = families::default_labels;
  CHECK(classify_base(families::cycle(dl(5))) == BaseClass::Cycle);
  CHECK(classify_base(families::complete_multipartite({1, 2, 2})) == BaseClass::CompleteMultipartite);
  CHECK(classify_base(families::petersen()) == BaseClass::None);
  CHECK(classify_base(families::complete(dl(1))) == BaseClass::SingleVertex);
  CHECK(classify_base(families::complete(dl(2))) == BaseClass::SingleEdge);
  CHECK(classify_base(families::path(dl(4))) == BaseClass::Tree);
  CHECK(classify_base(families::complete(dl(3))) == BaseClass::Cycle);
  CHECK(classify_base(families::complete(dl(4))) == BaseClass::Clique);
  CHECK(classify_base(families::cycle(dl(4))) == BaseClass::Cycle);
  CHECK(classify_base(families::complete_multipartite({2, 3})) == BaseClass::CompleteMultipartite);
  CHECK(classify_base(families::petersen().without("v0")) == BaseClass::None);
  auto chorded = families::cycle(dl(6)).label_edges();
  chorded.emplace_back("v0", "v3");
  Graph small(dl(6), chorded);
  CHECK(classify_base(small) == BaseClass::SmallGraph);
  CHECK_THROWS_AS(classify_base(families::empty({"a", "b"})), PreconditionError);
  CHECK(to_string(BaseClass::CompleteMultipartite) == "CompleteMultipartite");
}

TEST_CASE("cactus detection and cycle order") {
  testing::Rng rng(3);
  for (int i = 0; i < 50; ++i) CHECK(is_cactus(testing::random_cactus(rng, 20, 6)));
  CHECK_FALSE(is_cactus(families::complete(families::default_labels(4))));
  auto order = cycle_order(families::cycle({"p", "q", "r", "s", "t"}));
  REQUIRE(order.size() == 5);
  CHECK(families::cycle(order) == families::cycle({"p", "q", "r", "s", "t"}));
}
