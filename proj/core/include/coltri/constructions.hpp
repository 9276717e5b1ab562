#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <vector>

#include "coltri/colourful_graph.hpp"
#include "coltri/random.hpp"

namespace coltri {

/// Parameters of the double-path manifold family. sigma and tau are 0-based permutations of
/// [0, k); the resulting graph has n = 4kd vertices.
struct ConstructionParams {
  int d = 3;
  std::size_t k = 1;
  Permutation sigma;
  Permutation tau;
};

/// The base multigraph G0 before the colour-(d+1) long edges are added. Labels are
/// a_i -> i-1, a'_i -> kd+i-1, b_i -> 2kd+i-1, b'_i -> 3kd+i-1 for i in [1..kd].
struct PartialGraph {
  enum class Row { A = 0, APrime = 1, B = 2, BPrime = 3 };

  int d = 0;
  std::size_t k = 0;
  std::vector<ColourfulGraph::Edge> edges;

  std::size_t length() const { return k * static_cast<std::size_t>(d); }
  std::size_t order() const { return 4 * length(); }
  Vertex label(Row row, std::size_t i) const {
    return static_cast<Vertex>(static_cast<std::size_t>(row) * length() + i - 1);
  }
  /// "a3", "a'3", "b1", "b'7".
  std::string name(Vertex v) const;
  std::size_t degree(Vertex v) const;
  /// Colours of the edges at v, sorted.
  std::vector<int> colours_at(Vertex v) const;
};

/// Throws BadParams unless d >= 3 and k >= 1.
PartialGraph build_G0(int d, std::size_t k);

/// G(sigma, tau) together with the map from G0 labels to canonical vertex ids.
struct ManifoldConstruction {
  ConstructionParams params;
  ColourfulGraph graph;
  std::vector<Vertex> vertex_of;
};

/// Adds a_{id} a'_{sigma(i)d} and b_{id} b'_{tau(i)d} in colour d+1. For odd d the graph is
/// bipartite only if sigma and tau preserve the parity of i; other inputs throw BadParams.
ManifoldConstruction build_manifold(const ConstructionParams& params);

/// True iff (d, k, sigma, tau) yields a valid colourful graph.
bool params_admissible(const ConstructionParams& params);

/// Uniform sigma, tau among the admissible ones: all of S_k for even d, parity-preserving
/// permutations (uniform on odds x uniform on evens) for odd d.
ConstructionParams random_params(int d, std::size_t k, Rng& rng);

/// From a d=3 construction, adds a_i b_i and a'_i b'_i in every colour 5..target_d+1.
/// Throws NotAConstructionGraph unless the input has d = 3; BadParams unless target_d >= 4.
ColourfulGraph build_planar_family(const ManifoldConstruction& g3, int target_d);

/// (k!)^2 n! / 4 with n = 4kd.
mpz_class family_size_lower_bound(int d, std::size_t k);

/// Colour-preserving automorphisms of a connected colourful graph (white/black swaps included).
/// Throws Disconnected.
std::size_t coloured_automorphism_count(const ColourfulGraph& g);

/// One-line image notation, 1-based: "3 1 2" or "3,1,2". Throws BadParams.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

/// Number of cycles of sigma o tau^{-1}.
std::size_t cycles_of_sigma_tau_inverse(const Permutation& sigma, const Permutation& tau);

}  // namespace coltri
