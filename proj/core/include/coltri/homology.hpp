#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coltri/colourful_graph.hpp"

namespace coltri {

/// Column-major sparse integer matrix; each column sorted by row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

/// Rank over Z/pZ. p must be prime and below 2^31.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p = 2147483647u);

/// Rank over the rationals, by fraction-free integer column elimination (GMP).
std::size_t rank_exact(const SparseMatrix& m);

/// A cell of X(G_I): a component of G_J for a proper subset J of I. Bigger J means a
/// lower-dimensional cell; (J1,C1) is a face of (J2,C2) iff J2 is a subset of J1 and C2 of C1.
struct PosetCell {
  ColourSet colours;
  std::uint32_t component = 0;  // index into residues(G, colours)
  Vertex min_vertex = 0;
};

/// Order complex of the face poset of X(G_I) (its barycentric subdivision), optionally
/// restricted to one component of G_I. Poset elements are totally ordered by
/// (|J|, min vertex, bitmask of J); simplices list their elements in that order and
/// boundaries use alternating signs by position.
class OrderComplex {
public:
  static OrderComplex build(const ColourfulGraph& g, ColourSet colours,
                            std::optional<std::span<const Vertex>> component = std::nullopt);

  /// Dimension of the complex: |I| - 1.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  const std::vector<PosetCell>& cells() const { return cells_; }
  const std::vector<std::vector<std::uint32_t>>& simplices(int k) const {
    return simplices_.at(static_cast<std::size_t>(k));
  }
  std::size_t simplex_count(int k) const { return simplices(k).size(); }

  /// Boundary map from k-chains to (k-1)-chains, 1 <= k <= dimension().
  const SparseMatrix& boundary(int k) const { return boundaries_.at(static_cast<std::size_t>(k - 1)); }

  /// True iff every composite boundary map vanishes.
  bool boundary_squared_zero() const;

  long long euler_characteristic() const;

private:
  std::vector<PosetCell> cells_;
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices_;
  std::vector<SparseMatrix> boundaries_;
};

/// Rational Betti numbers b_0..b_top.
struct BettiVector {
  std::vector<std::size_t> betti;

  long long euler_characteristic() const;
  /// (1, 0, ..., 0, 1) of length dim+1; for dim 0, (2).
  bool is_sphere(int dim) const;
  std::string to_string() const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

enum class RankMethod {
  /// Exact over Q: ranks mod p, re-done exactly wherever a drop could change the answer.
  Exact,
  /// Mod p only; an upper bound on every rational Betti number.
  ModP,
};

/// Throws Error if boundary o boundary != 0.
BettiVector betti_numbers(const OrderComplex& complex, RankMethod method = RankMethod::Exact);

/// Betti numbers of the whole of X(G_I).
BettiVector betti_numbers(const ColourfulGraph& g, ColourSet colours,
                          RankMethod method = RankMethod::Exact);

}  // namespace coltri
