#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "coltri/colour_set.hpp"

namespace coltri {

using Vertex = std::uint32_t;

/// One colour class as a map white index -> black index (both 0-based, local to their side).
using Permutation = std::vector<std::uint32_t>;

/// A (d+1)-colourful graph: bipartite, (d+1)-regular, properly edge-coloured by [1..d+1].
///
/// Stored as d+1 bijections from white vertices to black vertices. Vertex ids are 0-based:
/// whites are 0..half-1 and blacks are half..n-1. Colours are 1-based everywhere in the API.
/// Parallel edges occur when two matchings agree on a white vertex.
class ColourfulGraph {
public:
  /// Validates and builds a graph. Throws LengthMismatch or NotABijection.
  static ColourfulGraph from_matchings(int d, std::vector<Permutation> matchings);

  /// Edge-list form on arbitrary vertex ids 0..n-1: (u, v, colour).
  struct Edge {
    Vertex u;
    Vertex v;
    int colour;
  };

  /// Builds a graph from an edge list with arbitrary labels by 2-colouring each component;
  /// the side holding a component's smallest label becomes white. Whites and blacks are then
  /// renumbered in increasing label order. `label_of`, when given, receives for every
  /// original label the canonical vertex id. Throws NotBipartite, LengthMismatch, NotABijection.
  static ColourfulGraph from_edge_list(int d, std::size_t n, std::span<const Edge> edges,
                                       std::vector<Vertex>* label_of = nullptr);

  int dim() const { return d_; }
  int colour_count() const { return d_ + 1; }
  ColourSet all_colours() const { return ColourSet::all(d_ + 1); }
  std::size_t half() const { return half_; }
  std::size_t order() const { return 2 * half_; }

  bool is_white(Vertex v) const { return v < half_; }
  Vertex black(std::uint32_t local) const { return static_cast<Vertex>(half_ + local); }

  /// The endpoint of the colour-`colour` edge at `v`.
  Vertex neighbour(Vertex v, int colour) const {
    const auto c = static_cast<std::size_t>(colour - 1);
    return v < half_ ? static_cast<Vertex>(half_ + forward_[c][v])
                     : inverse_[c][v - half_];
  }

  /// matching(c)[w] = black-local index joined to white w by colour c.
  std::span<const std::uint32_t> matching(int colour) const {
    return forward_[static_cast<std::size_t>(colour - 1)];
  }
  std::span<const std::uint32_t> inverse_matching(int colour) const {
    return inverse_[static_cast<std::size_t>(colour - 1)];
  }
  const std::vector<Permutation>& matchings() const { return forward_; }

  /// Number of edges joining white `w` and black `b` (multiplicity).
  int multiplicity(Vertex w, Vertex b) const;

  /// All edges, ordered by colour then white vertex.
  std::vector<Edge> edges() const;

  /// The |I|-colourful graph on the vertices of `component` using only colours in `colours`,
  /// with colours renumbered 1..|I| in increasing order. `component` must be closed under
  /// the colours (a union of residues); throws NotAComponent otherwise.
  ColourfulGraph restrict_to(ColourSet colours, std::span<const Vertex> component) const;

  /// Drops colour `colour` entirely (the d-colourful graph G^colour).
  ColourfulGraph without_colour(int colour) const;

  bool is_connected() const;

  friend bool operator==(const ColourfulGraph& a, const ColourfulGraph& b) {
    return a.d_ == b.d_ && a.forward_ == b.forward_;
  }

private:
  ColourfulGraph(int d, std::vector<Permutation> forward);

  int d_ = 0;
  std::size_t half_ = 0;
  std::vector<Permutation> forward_;
  std::vector<Permutation> inverse_;
};

/// Number of cycles of a permutation of [0..size).
std::size_t cycle_count(std::span<const std::uint32_t> perm);

/// a o b^{-1} as a permutation of black-local indices (a(b^{-1}(x))).
Permutation compose_inverse(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

}  // namespace coltri
