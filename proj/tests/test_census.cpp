#include <doctest.h>

#include <sstream>

#include "census_oracle.hpp"
#include "coltri/census.hpp"
#include "coltri/residues.hpp"
#include "support.hpp"

using namespace coltri;
using namespace coltri::testing;

namespace {

mpz_class choose(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

const ClassCount& at(const CensusReport& r, CensusClass c) { return r[c]; }

}  // namespace

TEST_CASE("fast enumerator agrees with the labelled edge-list oracle") {
  for (int d = 1; d <= 3; ++d) {
    for (std::size_t n = 2; n <= 6; n += 2) {
      CAPTURE(d);
      CAPTURE(n);
      const auto fast = enumerate(d, n);
      const auto slow = naive_census(d, n);
      for (auto c : all_census_classes()) {
        CAPTURE(class_name(c));
        const auto i = static_cast<std::size_t>(c);
        CHECK(fast.counts[i].labelled == slow.labelled[i]);
        CHECK(fast.counts[i].canonical * 1 == slow.coloured[i] / choose(n, n / 2));
        CHECK(slow.coloured[i] % choose(n, n / 2) == 0);
      }
    }
  }
}

TEST_CASE("small census values") {
  const auto r2 = enumerate(3, 2);
  for (auto c : {CensusClass::All, CensusClass::Manifold, CensusClass::SphereYes,
                 CensusClass::Melonic, CensusClass::PropertyP}) {
    CHECK(at(r2, c).labelled == 1);
    CHECK(at(r2, c).canonical == 1);
  }
  CHECK(r2.representatives == 1);

  const auto r4 = enumerate(3, 4);
  CHECK(at(r4, CensusClass::All).canonical == 16);
  CHECK(r4.representatives == 8);
  // Regression values, frozen after the oracle agreement above.
  CHECK(at(r4, CensusClass::All).labelled == 45);
  CHECK(at(r4, CensusClass::Manifold).labelled == 45);
  CHECK(at(r4, CensusClass::SphereYes).labelled == 24);
  CHECK(at(r4, CensusClass::ManifoldRhs).labelled == 42);

  const auto r6 = enumerate(3, 6);
  CHECK(at(r6, CensusClass::All).labelled == 12285);
  CHECK(at(r6, CensusClass::Manifold).labelled == 10125);
  CHECK(at(r6, CensusClass::Manifold).canonical == 1080);
  CHECK(at(r6, CensusClass::SphereYes).labelled == 2640);

  // The two-ball graph (id,id,id,swap) is counted among the manifolds.
  bool seen = false;
  CensusOptions options;
  options.threads = 2;
  options.on_graph = [&](const ColourfulGraph& g, const GraphClassification& cls) {
    if (g == two_balls()) {
      seen = true;
      CHECK(cls.in(CensusClass::Manifold));
      CHECK(cls.in(CensusClass::SphereYes));
    }
  };
  enumerate(3, 4, options);
  CHECK(seen);
}

TEST_CASE("d=2 census separates the torus") {
  bool torus_seen = false;
  CensusOptions options;
  options.on_graph = [&](const ColourfulGraph& g, const GraphClassification& cls) {
    CHECK(cls.in(CensusClass::Manifold));
    if (g.is_connected()) CHECK(cls.in(CensusClass::SphereYes) == cls.in(CensusClass::PropertyP));
    if (g == torus()) {
      torus_seen = true;
      CHECK(cls.in(CensusClass::All));
      CHECK_FALSE(cls.in(CensusClass::PropertyP));
    }
  };
  const auto r = enumerate(2, 6, options);
  CHECK(torus_seen);
  CHECK(at(r, CensusClass::PropertyP).canonical < at(r, CensusClass::All).canonical);
  CHECK(at(r, CensusClass::SphereUnknown).canonical == 0);
}

TEST_CASE("class chain and d=3 exactness") {
  for (std::size_t n = 2; n <= 8; n += 2) {
    CensusOptions options;
    options.on_graph = [&](const ColourfulGraph&, const GraphClassification& cls) {
      CHECK(cls.in(CensusClass::Manifold) == cls.in(CensusClass::PropertyP));
      if (cls.in(CensusClass::Melonic)) CHECK(cls.in(CensusClass::SphereYes));
      if (cls.in(CensusClass::SphereYes)) CHECK(cls.in(CensusClass::Manifold));
      if (cls.in(CensusClass::ManifoldRhs)) CHECK(cls.in(CensusClass::Manifold));
      CHECK_FALSE(cls.in(CensusClass::ManifoldUnknown));
    };
    const auto r = enumerate(3, n, options);
    for (auto pick : {&ClassCount::canonical, &ClassCount::labelled}) {
      CHECK(at(r, CensusClass::Melonic).*pick <= at(r, CensusClass::SphereYes).*pick);
      CHECK(at(r, CensusClass::SphereYes).*pick <= at(r, CensusClass::Manifold).*pick);
      CHECK(at(r, CensusClass::Manifold).*pick <= at(r, CensusClass::PropertyP).*pick);
      CHECK(at(r, CensusClass::PropertyP).*pick <= at(r, CensusClass::All).*pick);
    }
  }
}

TEST_CASE("census guards and output") {
  CHECK_THROWS_AS(enumerate(3, 5), OddN);
  CensusOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(enumerate(3, 8, tight), BudgetExceeded);
  CHECK(tuple_count(3, 8) == 331776);
  CHECK(labelled_from_components(2, {0, 1}) == 1);
  CHECK(labelled_from_components(4, {0, 8, 8}) == 6 * 4 + 6 * 2);

  const auto r = enumerate(3, 4);
  std::ostringstream rows;
  write_census_rows(rows, r);
  CHECK(rows.str().rfind("all,45\npropertyP,45\n", 0) == 0);
  CHECK(rows.str().find("canonical.all,16\n") != std::string::npos);

  // Same report regardless of thread count.
  CensusOptions one;
  one.threads = 1;
  std::ostringstream rows1;
  write_census_rows(rows1, enumerate(3, 4, one));
  CHECK(rows1.str() == rows.str());
}

TEST_CASE("gap bounds over the census") {
  for (std::size_t n = 2; n <= 8; n += 2) {
    const auto r = verify_lemma_bounds(3, n);
    CHECK(r.ok());
    CHECK(r.lemma1_checked > 0);
    CHECK(r.euler_poincare_checked == r.lemma1_checked);
  }
  const auto r2 = verify_lemma_bounds(3, 2);
  REQUIRE(r2.lemma1_min_slack.has_value());
  CHECK(r2.lemma1_min_slack->num == 1);
  CHECK(r2.lemma1_min_slack->den == 3);

  const auto r4 = verify_lemma_bounds(4, 4);
  CHECK(r4.ok());
  CHECK(r4.lemma2_checked > 0);
}

namespace {

// Independent count of planar third-colour extensions by component number.
std::map<std::size_t, std::uint64_t> extension_oracle(const ColourfulGraph& c) {
  const auto n = c.order();
  std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings;
  all_perfect_matchings(n, matchings);
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& m : matchings) {
    std::vector<std::array<std::size_t, 3>> nb(n);
    for (const auto& e : c.edges()) {
      nb[e.u][e.colour - 1] = e.v;
      nb[e.v][e.colour - 1] = e.u;
    }
    for (auto [u, v] : m) {
      nb[u][2] = v;
      nb[v][2] = u;
    }
    // bipartite check and components by BFS
    std::vector<int> side(n, -1);
    std::size_t components = 0;
    bool bipartite = true;
    for (std::size_t s = 0; s < n && bipartite; ++s) {
      if (side[s] != -1) continue;
      ++components;
      side[s] = 0;
      std::vector<std::size_t> queue{s};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto v : nb[queue[q]]) {
          if (side[v] == -1) {
            side[v] = 1 - side[queue[q]];
            queue.push_back(v);
          } else if (side[v] == side[queue[q]]) {
            bipartite = false;
          }
        }
      }
    }
    if (!bipartite) continue;
    // faces: alternating cycles for each colour pair
    std::size_t faces = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        std::vector<bool> seen(n, false);
        for (std::size_t s = 0; s < n; ++s) {
          if (seen[s]) continue;
          ++faces;
          std::size_t u = s;
          int colour = a;
          do {
            seen[u] = true;
            u = nb[u][colour];
            colour = colour == a ? b : a;
          } while (u != s || colour != a);
        }
      }
    }
    const long long chi = static_cast<long long>(n) - 3 * static_cast<long long>(n) / 2 +
                          static_cast<long long>(faces);
    if (chi == 2 * static_cast<long long>(components)) ++out[components];
  }
  return out;
}

}  // namespace

TEST_CASE("extension bound") {
  const auto single = verify_extension_bound(dipole(1));
  CHECK(single.cycles == 1);
  REQUIRE(single.buckets.size() == 1);
  CHECK(single.buckets[0].components == 1);
  CHECK(single.buckets[0].count == 1);
  CHECK(single.buckets[0].bound == mpz_class(1024));
  CHECK(single.ok());

  const auto two = ColourfulGraph::from_matchings(1, {{0, 1, 2, 3}, {1, 0, 3, 2}});
  const auto r = verify_extension_bound(two);
  CHECK(r.cycles == 2);
  CHECK(r.ok());
  const auto oracle = extension_oracle(two);
  REQUIRE(r.buckets.size() == oracle.size());
  for (const auto& b : r.buckets) CHECK(oracle.at(b.components) == b.count);

  // The torus's first two colours form one 6-cycle; its third colour is a non-planar
  // extension and must be filtered.
  const auto t = torus().without_colour(3);
  const auto rt = verify_extension_bound(t);
  CHECK(rt.non_planar >= 1);
  const auto ot = extension_oracle(t);
  for (const auto& b : rt.buckets) CHECK(ot.at(b.components) == b.count);

  CHECK_THROWS_AS(verify_extension_bound(two_balls()), BadParams);
  CHECK_THROWS_AS(verify_extension_bound(two, 6), BudgetExceeded);
}

TEST_CASE("vertex-count statistics") {
  const auto report = vn_experiment(3, {1, 2, 4}, 30, 0);
  REQUIRE(report.rows.size() == 3);
  const auto& k1 = report.rows[0];
  CHECK(k1.mean_cycles == 1.0);
  CHECK(k1.mean_uniform_cycles == 1.0);
  CHECK(k1.n == 12);
  for (const auto& row : report.rows) {
    REQUIRE(row.vertex_offset.has_value());
    CHECK(*row.vertex_offset == 3);
    CHECK(row.min_vertices <= row.median_vertices);
    CHECK(row.median_vertices <= row.max_vertices);
  }
  // Same seed, same report.
  const auto again = vn_experiment(3, {1, 2, 4}, 30, 0);
  CHECK(again.rows[2].mean_vertices == report.rows[2].mean_vertices);
  CHECK(harmonic(1) == 1.0);
  CHECK(std::abs(harmonic(100) - 5.187377517639621) < 1e-12);
  CHECK_THROWS_AS(vn_experiment(2, {1}, 1, 0), BadParams);
}
