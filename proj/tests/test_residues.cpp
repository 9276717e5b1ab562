#include <doctest.h>

#include "coltri/residues.hpp"
#include "support.hpp"

using namespace coltri;
using namespace coltri::testing;

TEST_CASE("residues of small graphs") {
  const auto d = dipole(3);
  const auto part = residues(d, ColourSet::of({1, 2, 3}));
  CHECK(part.count() == 1);
  CHECK(part.components[0] == std::vector<Vertex>{0, 1});
  CHECK(residues(d, ColourSet()).count() == 2);

  CHECK(kappa(torus(), ColourSet::of({1, 2})) == 1);
  CHECK(kappa(torus(), ColourSet()) == 6);
  CHECK_THROWS_AS(residues(d, ColourSet::of({5})), InvalidColourSet);
}

TEST_CASE("kappa values") {
  const auto d = dipole(3);
  for (ColourSet s : all_subsets(d.all_colours())) {
    CHECK(kappa(d, s) == (s.empty() ? 2u : 1u));
  }
  const auto g = two_balls();
  CHECK(kappa(g, ColourSet::of({1})) == 2);
  // The two tetrahedra of each ball share their {1,2,3} vertex; the others are shared by all.
  CHECK(kappa(g, ColourSet::of({1, 2, 3})) == 2);
  CHECK(kappa(g, ColourSet::of({1, 2, 4})) == 1);
  CHECK(kappa(g, ColourSet::of({1, 3, 4})) == 1);
  CHECK(kappa(g, ColourSet::of({2, 3, 4})) == 1);

  const KappaTable table(g);
  CHECK(table(ColourSet::of({1, 4})) == 1);
  CHECK(table(ColourSet::of({1, 2})) == 2);
}

TEST_CASE("kappa_r and f-vectors") {
  CHECK(kappa_r(dipole(3), ColourSet::all(4), 3) == 4);
  CHECK(kappa_r(two_balls(), ColourSet::all(4), 2) == 2 + 2 + 2 + 1 + 1 + 1);
  CHECK(kappa_r(two_balls(), ColourSet::all(4), 0) == 4);
  CHECK_THROWS_AS(kappa_r(two_balls(), ColourSet::of({1, 2}), 3), RangeError);
  CHECK(f_vector(dipole(3), ColourSet::all(4)) == std::vector<std::size_t>{4, 6, 4, 2});
  CHECK(f_vector(torus(), ColourSet::all(3)) == std::vector<std::size_t>{3, 9, 6});
  CHECK_THROWS(f_vector(torus(), ColourSet()));
}

TEST_CASE("genus of 3-residues") {
  const auto d = dipole(3);
  const auto r = genus_of_residue(d, ColourSet::of({1, 2, 3}), std::vector<Vertex>{0, 1});
  CHECK(r.vertices == 2);
  CHECK(r.edges == 3);
  CHECK(r.faces == 3);
  CHECK(r.genus == 0);

  const auto t = genus_of_residue(torus(), ColourSet::all(3), std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(t.vertices == 6);
  CHECK(t.edges == 9);
  CHECK(t.faces == 3);
  CHECK(t.genus == 1);

  for (ColourSet s : subsets_of_size(ColourSet::all(4), 3)) {
    for (const auto& e : embedded_residues(two_balls(), s)) CHECK(e.genus == 0);
  }
  CHECK_THROWS_AS(genus_of_residue(torus(), ColourSet::all(3), std::vector<Vertex>{0, 1}),
                  NotAComponent);
  CHECK_THROWS_AS(genus_of_residue(two_balls(), ColourSet::of({1, 2}), std::vector<Vertex>{0, 2}),
                  InvalidColourSet);
}

TEST_CASE("property P") {
  CHECK(has_property_P(dipole(3)));
  CHECK(has_property_P(two_balls()));
  CHECK_FALSE(has_property_P(torus()));
  const auto w = find_nonplanar_residue(torus_in_d3());
  REQUIRE(w.has_value());
  CHECK(w->colours == ColourSet::of({1, 2, 3}));
  CHECK(w->genus == 1);
  CHECK_FALSE(find_nonplanar_residue(two_balls()).has_value());
}
