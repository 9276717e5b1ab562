#include <doctest.h>

#include <random>

#include "coltri/cgf.hpp"
#include "coltri/constructions.hpp"
#include "coltri/dipoles.hpp"
#include "coltri/homology.hpp"
#include "coltri/random.hpp"
#include "coltri/residues.hpp"
#include "coltri/verdicts.hpp"
#include "support.hpp"

using namespace coltri;
using namespace coltri::testing;

namespace {

std::vector<ColourfulGraph> random_batch(std::uint32_t seed, int count, int dmin, int dmax,
                                         std::size_t max_half) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> dim(dmin, dmax);
  std::uniform_int_distribution<std::size_t> half(1, max_half);
  std::vector<ColourfulGraph> out;
  for (int i = 0; i < count; ++i) {
    const int d = dim(gen);
    out.push_back(sample_graph(d, half(gen), gen));
  }
  return out;
}

long long alternating(const std::vector<std::size_t>& v) {
  long long sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(v[i]);
  }
  return sum;
}

}  // namespace

TEST_CASE("property: kappa matches walk and DFS oracles") {
  for (const auto& g : random_batch(1, 150, 1, 5, 7)) {
    const EdgeGraph oracle(g);
    for (int a = 1; a <= g.colour_count(); ++a) {
      for (int b = a + 1; b <= g.colour_count(); ++b) {
        const auto walked = oracle.alternating_cycles(a, b);
        CHECK(kappa(g, ColourSet::of({a, b})) == walked);
        CHECK(bicoloured_cycles(g, a, b) == walked);
        CHECK(cycle_count(compose_inverse(g.matching(a), g.matching(b))) == walked);
      }
    }
    const KappaTable table(g);
    for (ColourSet s : all_subsets(g.all_colours())) {
      CHECK(table(s) == oracle.components(s.bits()));
    }
  }
}

TEST_CASE("property: counting identities") {
  for (const auto& g : random_batch(2, 150, 1, 5, 8)) {
    const KappaTable table(g);
    for (ColourSet s : all_subsets(g.all_colours())) {
      if (s.empty()) continue;
      CHECK(kappa_r(table, s, 1) == static_cast<std::size_t>(s.size()) * g.half());
      CHECK(kappa_r(table, s, 0) == g.order());
      for (int c : s.colours()) CHECK(table(s.without(c)) >= table(s));
    }
    CHECK((table(g.all_colours()) == 1) == g.is_connected());
  }
}

TEST_CASE("property: genus is a non-negative integer") {
  for (const auto& g : random_batch(3, 150, 2, 5, 8)) {
    for (ColourSet s : subsets_of_size(g.all_colours(), 3)) {
      for (const auto& r : embedded_residues(g, s)) {
        const long long chi = static_cast<long long>(r.vertices) -
                              static_cast<long long>(r.edges) + static_cast<long long>(r.faces);
        CHECK(chi % 2 == 0);
        CHECK(chi <= 2);
        CHECK(chi == 2 - 2 * static_cast<long long>(r.genus));
      }
    }
  }
}

TEST_CASE("property: genus agrees with surface homology") {
  for (const auto& g : random_batch(4, 80, 2, 3, 6)) {
    for (ColourSet s : subsets_of_size(g.all_colours(), 3)) {
      for (const auto& r : embedded_residues(g, s)) {
        const auto c = OrderComplex::build(g, s, std::span<const Vertex>(r.component));
        const auto b = betti_numbers(c);
        CHECK(b.betti == std::vector<std::size_t>{1, 2 * r.genus, 1});
      }
    }
  }
}

TEST_CASE("property: CGF round trip") {
  for (const auto& g : random_batch(5, 100, 1, 6, 9)) {
    CHECK(parse_cgf(to_cgf(g)) == g);
    CHECK(ColourfulGraph::from_edge_list(g.dim(), g.order(), g.edges()) == g);
  }
}

TEST_CASE("property: order complexes") {
  for (const auto& g : random_batch(6, 60, 1, 4, 4)) {
    for (ColourSet s : all_subsets(g.all_colours())) {
      if (s.empty()) continue;
      const auto c = OrderComplex::build(g, s);
      CHECK(c.boundary_squared_zero());
      const auto b = betti_numbers(c);
      CHECK(b.euler_characteristic() == alternating(f_vector(g, s)));
      CHECK(b.euler_characteristic() == c.euler_characteristic());
      // A one-colour residue is a single edge: two points.
      CHECK(b.betti.front() == (s.size() == 1 ? 2 : 1) * kappa(g, s));
      const auto modp = betti_numbers(c, RankMethod::ModP);
      CHECK(modp == b);
    }
  }
}

TEST_CASE("property: exact Betti numbers match dense rational ranks") {
  for (const auto& g : random_batch(7, 25, 2, 3, 3)) {
    const auto c = OrderComplex::build(g, g.all_colours());
    std::vector<std::size_t> ranks(static_cast<std::size_t>(c.dimension()) + 2, 0);
    for (int k = 1; k <= c.dimension(); ++k) {
      const auto& m = c.boundary(k);
      std::vector<std::vector<mpq_class>> dense(m.rows, std::vector<mpq_class>(m.cols, 0));
      for (std::size_t col = 0; col < m.cols; ++col) {
        for (auto [r, v] : m.columns[col]) dense[r][col] += v;
      }
      ranks[static_cast<std::size_t>(k)] = dense_rank(std::move(dense));
    }
    const auto b = betti_numbers(c);
    for (int k = 0; k <= c.dimension(); ++k) {
      const auto expected = c.simplex_count(k) - ranks[static_cast<std::size_t>(k)] -
                            ranks[static_cast<std::size_t>(k) + 1];
      CHECK(b.betti[static_cast<std::size_t>(k)] == expected);
    }
  }
}

TEST_CASE("property: dipole removal preserves topology") {
  int removals = 0;
  for (const auto& g : random_batch(8, 200, 2, 4, 6)) {
    if (!g.is_connected()) continue;
    const auto before = betti_numbers(g, g.all_colours());
    for (const auto& move : find_dipoles(g)) {
      if (g.order() <= 2) break;
      const auto h = remove_dipole(g, move);
      ++removals;
      CHECK(h.order() == g.order() - 2);
      CHECK(betti_numbers(h, h.all_colours()) == before);
      // 3-residues avoiding the removed pair keep their genus.
      for (ColourSet s : subsets_of_size(g.all_colours(), 3)) {
        std::multiset<std::size_t> kept_g;
        std::multiset<std::size_t> all_h;
        for (const auto& r : embedded_residues(g, s)) {
          if (std::find(r.component.begin(), r.component.end(), move.white) == r.component.end()) {
            kept_g.insert(r.genus);
          }
        }
        for (const auto& r : embedded_residues(h, s)) all_h.insert(r.genus);
        for (auto genus : kept_g) {
          auto it = all_h.find(genus);
          CHECK(it != all_h.end());
          if (it != all_h.end()) all_h.erase(it);
        }
      }
    }
  }
  CHECK(removals > 20);
}

TEST_CASE("property: verdict consistency") {
  for (const auto& g : random_batch(9, 150, 2, 4, 5)) {
    if (g.dim() == 3) CHECK((is_manifold(g).status == Status::Yes) == has_property_P(g));
    const auto m = is_manifold(g);
    CHECK(check_certificate(g, m));
    if (!g.is_connected()) continue;
    const auto s = is_sphere(g);
    CHECK(check_certificate(g, s));
    if (melonic_reduce(g).reached_dipole) {
      std::vector<Vertex> all(g.order());
      std::iota(all.begin(), all.end(), Vertex{0});
      CHECK(is_rational_homology_sphere(g, g.all_colours(), all).status == Status::Yes);
      CHECK(s.status == Status::Yes);
    }
    if (s.status == Status::Yes) CHECK(m.status != Status::No);
  }
}

TEST_CASE("property: Euler-Poincare on planar 3-residues") {
  for (const auto& g : random_batch(10, 200, 2, 5, 8)) {
    for (ColourSet s : subsets_of_size(g.all_colours(), 3)) {
      const auto w = lemma1_witness(g, s);
      if (!w.hypothesis_holds) continue;
      CHECK(euler_poincare_check(g, s));
      CHECK(kappa_r(g, s, 2) == 2 * kappa(g, s) + g.half());
      CHECK_FALSE(w.slack.negative());
    }
  }
}

TEST_CASE("property: construction outputs") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 3 + trial % 3;
    const std::size_t k = 1 + static_cast<std::size_t>(trial) % 4;
    const auto p = random_params(d, k, rng);
    const auto c = build_manifold(p);
    CHECK(parse_cgf(to_cgf(c.graph)) == c.graph);
    CHECK(melonic_reduce(c.graph.without_colour(d + 1)).reached_dipole);
    if (d == 3) CHECK(is_manifold(c.graph).status == Status::Yes);
  }
}
