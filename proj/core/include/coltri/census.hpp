#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coltri/colourful_graph.hpp"
#include "coltri/verdicts.hpp"

namespace coltri {

// ---------------------------------------------------------------------------------------------
// Classification

/// Census classes, in report order.
enum class CensusClass : std::size_t {
  All,
  PropertyP,        // every 3-residue planar (H_d)
  Manifold,         // is_manifold == Yes (M_d; exact for d <= 3)
  ManifoldUnknown,  // is_manifold == Unknown
  SphereYes,
  SphereUnknown,
  Melonic,          // greedy melonic reduction reaches the dipole
  RationalSpheres,  // G_I a union of rational homology spheres for I in [1..d], |I| in {3,5} (N_d)
  ManifoldRhs,      // manifold Yes and X(G) a rational homology sphere (S_d)
};
inline constexpr std::size_t kCensusClassCount = 9;

std::string class_name(CensusClass c);
std::array<CensusClass, kCensusClassCount> all_census_classes();

struct GraphClassification {
  std::array<bool, kCensusClassCount> member{};
  std::size_t components = 0;

  bool in(CensusClass c) const { return member[static_cast<std::size_t>(c)]; }
};

/// Runs every check behind the census classes. Disconnected graphs are never spheres or
/// melonic.
GraphClassification classify(const ColourfulGraph& g, const VerdictOptions& options = {});

// ---------------------------------------------------------------------------------------------
// Enumeration

struct ClassCount {
  /// Matching tuples with whites {1..n/2} and blacks {n/2+1..n}.
  mpz_class canonical = 0;
  /// Edge-coloured multigraphs on the labelled vertex set [1..n] (no vertex colouring).
  mpz_class labelled = 0;
};

struct CensusReport {
  int d = 0;
  std::size_t n = 0;
  /// Representatives classified (matching tuples with colour 1 the identity).
  std::uint64_t representatives = 0;
  std::array<ClassCount, kCensusClassCount> counts{};

  const ClassCount& operator[](CensusClass c) const { return counts[static_cast<std::size_t>(c)]; }
};

struct CensusOptions {
  /// Refuse to start when (n/2)!^(d+1) exceeds this.
  double budget = 1e8;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
  VerdictOptions verdict;
  /// Called for every classified representative, in deterministic order after the merge.
  std::function<void(const ColourfulGraph&, const GraphClassification&)> on_graph;
};

/// (n/2)!^(d+1), the number of matching tuples.
mpz_class tuple_count(int d, std::size_t n);

/// Labelled count from canonical counts split by component number:
/// C(n, n/2) * sum_c count[c] / 2^c.
mpz_class labelled_from_components(std::size_t n, const std::vector<mpz_class>& by_components);

/// Exhaustive census over all matching tuples. Relabelling blacks makes colour 1 the identity
/// without changing any class, so only those (n/2)!^d representatives are classified and
/// counts are scaled by (n/2)!. Work is sharded by colour 2's matching. Throws BudgetExceeded,
/// OddN.
CensusReport enumerate(int d, std::size_t n, const CensusOptions& options = {});

/// `class,count` rows with labelled counts, then `canonical.class,count` rows, in report order.
void write_census_rows(std::ostream& out, const CensusReport& report);
void write_census_table(std::ostream& out, const CensusReport& report);

/// Calls `visit` for every tuple (id, m2, ..., m_{d+1}) in lexicographic order; single-threaded.
void for_each_representative(int d, std::size_t n,
                             const std::function<void(const ColourfulGraph&)>& visit);

// ---------------------------------------------------------------------------------------------
// Lemma checks

struct LemmaBoundReport {
  int d = 0;
  std::size_t n = 0;
  std::uint64_t graphs = 0;

  /// |I| = 3 colour sets whose residues are all planar.
  std::uint64_t lemma1_checked = 0;
  std::uint64_t lemma1_violations = 0;
  std::optional<Fraction> lemma1_min_slack;
  std::optional<ColourfulGraph> lemma1_extremal;
  ColourSet lemma1_extremal_colours;

  /// Euler-Poincare kappa^(2)_I = 2 kappa_I + n/2 on the same colour sets.
  std::uint64_t euler_poincare_checked = 0;
  std::uint64_t euler_poincare_violations = 0;

  /// |I| = 5 colour sets whose residues are all rational homology 4-spheres (d >= 4).
  std::uint64_t lemma2_checked = 0;
  std::uint64_t lemma2_violations = 0;
  std::optional<Fraction> lemma2_min_slack;
  std::optional<ColourfulGraph> lemma2_extremal;
  ColourSet lemma2_extremal_colours;

  bool ok() const {
    return lemma1_violations == 0 && lemma2_violations == 0 && euler_poincare_violations == 0;
  }
};

/// Checks both counting lemmas on every census representative. Throws BudgetExceeded.
LemmaBoundReport verify_lemma_bounds(int d, std::size_t n, const CensusOptions& options = {});

struct ExtensionBucket {
  std::size_t components = 0;  // k
  std::uint64_t count = 0;
  mpz_class bound;             // 2^{5n} n^{c-k}
  bool within_bound() const { return count <= bound; }
};

struct ExtensionBoundReport {
  std::size_t n = 0;
  std::size_t cycles = 0;  // c, the components of C
  std::uint64_t matchings_tried = 0;
  std::uint64_t non_bipartite = 0;
  std::uint64_t non_planar = 0;
  std::vector<ExtensionBucket> buckets;  // ascending k, non-empty buckets only

  bool ok() const;
};

/// Enumerates every colour-3 perfect matching on the labelled vertex set extending the
/// 2-colourful graph C (d = 1) to a planar 3-colourful graph, buckets them by component count
/// k and compares each bucket with 2^{5n} n^{c-k}. Throws BudgetExceeded when n > max_n.
ExtensionBoundReport verify_extension_bound(const ColourfulGraph& c, std::size_t max_n = 10);

// ---------------------------------------------------------------------------------------------
// Vertex-count statistics on the manifold family

struct VnRow {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_vertices = 0;  // V_n of X(G(sigma, tau))
  std::size_t min_vertices = 0;
  std::size_t median_vertices = 0;
  std::size_t max_vertices = 0;
  double vertices_per_n = 0;
  double n_over_log_n = 0;
  double mean_cycles = 0;      // cycles of sigma tau^-1 for the construction's sigma, tau
  double expected_cycles = 0;  // exact expectation for those permutations
  /// V_n - d * cycles(sigma tau^-1) when it is the same for every sample, else nullopt.
  std::optional<long long> vertex_offset;
  double mean_uniform_cycles = 0;  // cycles of sigma tau^-1 for uniform sigma, tau in S_k
  double harmonic_k = 0;           // H_k
};

struct StatsReport {
  int d = 3;
  std::uint64_t seed = 0;
  std::vector<VnRow> rows;
};

/// Harmonic number H_k.
double harmonic(std::size_t k);

/// For each k, samples admissible (sigma, tau), builds G(sigma, tau) and records the exact
/// vertex count of X(G) (sum of kappa over the d-subsets) and cycles of sigma tau^-1; also
/// samples uniform pairs in S_k for the pure permutation statistic. Row r uses the seed
/// `seed + k * 0x9E3779B97F4A7C15`.
StatsReport vn_experiment(int d, const std::vector<std::size_t>& ks, std::size_t samples,
                          std::uint64_t seed);

/// Sum of kappa_I over the d-element colour sets I: the number of vertices of X(G).
std::size_t complex_vertex_count(const ColourfulGraph& g);

void write_stats_rows(std::ostream& out, const StatsReport& report);

}  // namespace coltri
