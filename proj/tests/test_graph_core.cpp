#include <doctest.h>

#include <sstream>

#include "coltri/cgf.hpp"
#include "coltri/colourful_graph.hpp"
#include "coltri/residues.hpp"
#include "support.hpp"

using namespace coltri;
using namespace coltri::testing;

TEST_CASE("colour sets") {
  const auto s = ColourSet::of({4, 1, 2});
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "{1,2,4}");
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(3));
  CHECK(s.within(4));
  CHECK_FALSE(s.within(3));
  CHECK(ColourSet::of({1, 2}).subset_of(s));
  CHECK(s.without(4) == ColourSet::of({1, 2}));
  CHECK(s.colours() == std::vector<int>{1, 2, 4});
  CHECK_THROWS_AS(ColourSet::of({0}), InvalidColourSet);

  const auto pairs = subsets_of_size(ColourSet::all(4), 2);
  CHECK(pairs.size() == 6);
  CHECK(pairs.front() == ColourSet::of({1, 2}));
  CHECK(all_subsets(ColourSet::all(3)).size() == 8);
}

TEST_CASE("matching construction") {
  SUBCASE("dipole") {
    const auto g = dipole(3);
    CHECK(g.order() == 2);
    CHECK(g.multiplicity(0, 1) == 4);
    CHECK(g.is_connected());
  }
  SUBCASE("id id id swap") {
    const auto g = two_balls();
    CHECK(g.order() == 4);
    CHECK(g.neighbour(0, 4) == 3);
    CHECK(g.neighbour(3, 4) == 0);
    CHECK(g.multiplicity(0, 2) == 3);
  }
  SUBCASE("torus matchings") {
    const auto g = torus();
    CHECK(g.order() == 6);
    CHECK(g.edges().size() == 9);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(ColourfulGraph::from_matchings(3, {{0}, {0}, {0}}), LengthMismatch);
    CHECK_THROWS_AS(ColourfulGraph::from_matchings(1, {{0, 1}, {0}}), LengthMismatch);
    CHECK_THROWS_AS(ColourfulGraph::from_matchings(1, {{0, 0}, {0, 1}}), NotABijection);
    CHECK_THROWS_AS(ColourfulGraph::from_matchings(1, {{0, 2}, {0, 1}}), NotABijection);
  }
}

TEST_CASE("edge-list construction") {
  // A 4-cycle on labels 5,2,7,0 in colours 1/2: bipartite, canonicalised by label order.
  std::vector<ColourfulGraph::Edge> edges = {{5, 2, 1}, {2, 7, 2}, {7, 0, 1}, {0, 5, 2}};
  std::vector<ColourfulGraph::Edge> relabelled;
  const std::vector<Vertex> map = {0, 9, 1, 9, 9, 2, 9, 3};
  for (auto e : edges) relabelled.push_back({map[e.u], map[e.v], e.colour});
  std::vector<Vertex> label_of;
  const auto g = ColourfulGraph::from_edge_list(1, 4, relabelled, &label_of);
  CHECK(g.order() == 4);
  CHECK(label_of[0] == 0);  // smallest label is white
  CHECK(g.is_white(label_of[1]));
  CHECK_FALSE(g.is_white(label_of[2]));

  std::vector<ColourfulGraph::Edge> triangle = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  CHECK_THROWS(ColourfulGraph::from_edge_list(0, 3, triangle));
  std::vector<ColourfulGraph::Edge> odd = {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 2},
                                           {0, 2, 3}, {1, 3, 3}};
  CHECK_THROWS_AS(ColourfulGraph::from_edge_list(2, 4, odd), NotBipartite);

  // Round trip through the edge list is the identity for canonical graphs.
  const auto t = torus();
  CHECK(ColourfulGraph::from_edge_list(2, 6, t.edges()) == t);
}

TEST_CASE("restriction and colour deletion") {
  const auto g = two_balls();
  const auto part = residues(g, ColourSet::of({1, 2, 3}));
  REQUIRE(part.count() == 2);
  const auto r = g.restrict_to(ColourSet::of({1, 2, 3}), part.components[0]);
  CHECK(r.dim() == 2);
  CHECK(r.order() == 2);
  CHECK_THROWS_AS(g.restrict_to(ColourSet::of({1, 2, 3}), std::vector<Vertex>{0}), NotAComponent);

  const auto h = g.without_colour(4);
  CHECK(h.dim() == 2);
  CHECK_FALSE(h.is_connected());
  CHECK(g.without_colour(1).is_connected());
}

TEST_CASE("cycle counting helpers") {
  CHECK(cycle_count(identity(5)) == 5);
  CHECK(cycle_count(Permutation{1, 2, 0}) == 1);
  CHECK(cycle_count(Permutation{1, 0, 3, 2}) == 2);
  const Permutation a{1, 2, 0};
  const auto ab = compose_inverse(a, a);
  CHECK(ab == identity(3));
}

TEST_CASE("CGF round trip and DOT") {
  for (const auto& g : {dipole(3), two_balls(), torus(), two_dipoles(4)}) {
    CHECK(parse_cgf(to_cgf(g)) == g);
  }
  const auto text = to_cgf(two_balls());
  CHECK(text.rfind("cgf 3 4\n", 0) == 0);

  const auto dot = to_dot(two_balls());
  CHECK(dot.find("graph G {") != std::string::npos);
  CHECK(dot.find("w1 -- b2 [color=orange, label=4];") != std::string::npos);
  CHECK(dot.find("w1 -- b1 [color=red, label=1];") != std::string::npos);
  CHECK(dot_palette.size() == 8);
}

TEST_CASE("CGF parse errors carry line and token") {
  auto expect = [](const char* text, std::size_t line, const char* token) {
    try {
      parse_cgf(std::string_view(text));
      FAIL("no error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.token() == token);
    }
  };
  expect("graph 3 2\n2\n2\n2\n2\n", 1, "graph");
  expect("cgf 3 3\n", 1, "3");
  expect("# comment\ncgf 1 4\n3 4\n3 x\n", 4, "x");
  expect("cgf 1 4\n3 4\n3 3\n", 3, "3");
  expect("cgf 1 4\n3 4\n3 5\n", 3, "5");
  expect("cgf 1 4\n3 4\n", 2, "");
  expect("cgf 1 4\n3 4 3\n4 3\n", 2, "3");
  // Comments and blank lines are ignored.
  CHECK(parse_cgf(std::string_view("\n# x\ncgf 1 2\n\n2\n# y\n2\n")) == dipole(1));
}
