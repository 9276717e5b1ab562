#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coltri/colourful_graph.hpp"

namespace coltri {

/// Connected components of G_I (the residues of G for colour set I).
struct ResiduePartition {
  ColourSet colours;
  /// Each component sorted ascending; components ordered by their minimum vertex.
  std::vector<std::vector<Vertex>> components;
  /// component_of[v] = index into `components`.
  std::vector<std::uint32_t> component_of;

  std::size_t count() const { return components.size(); }
};

/// Throws InvalidColourSet if I has a colour outside [1..d+1].
ResiduePartition residues(const ColourfulGraph& g, ColourSet colours);

/// Number of components of G_I; cheaper than residues() when only the count is needed.
std::size_t kappa(const ColourfulGraph& g, ColourSet colours);

/// kappa_J for every J subset of [1..d+1], indexed by J's bitmask.
class KappaTable {
public:
  explicit KappaTable(const ColourfulGraph& g);

  int colour_count() const { return colour_count_; }
  std::size_t operator()(ColourSet j) const { return kappa_.at(j.bits()); }
  std::span<const std::size_t> values() const { return kappa_; }

private:
  int colour_count_;
  std::vector<std::size_t> kappa_;
};

KappaTable kappa_table(const ColourfulGraph& g);

/// Sum of kappa_J over the r-element subsets J of I; the number of cells of X(G_I) of
/// dimension |I|-1-r. Throws RangeError unless 0 <= r <= |I|.
std::size_t kappa_r(const ColourfulGraph& g, ColourSet colours, int r);
std::size_t kappa_r(const KappaTable& table, ColourSet colours, int r);

/// Cell counts of X(G_I) by dimension 0..|I|-1. Throws InvalidColourSet when I is empty.
std::vector<std::size_t> f_vector(const ColourfulGraph& g, ColourSet colours);

/// A connected 3-coloured residue with its canonical embedding (colours i<j<k clockwise at
/// white vertices). Faces of the embedding are the bicoloured cycles.
struct EmbeddedResidue {
  std::vector<Vertex> component;
  ColourSet colours;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t genus = 0;
};

/// Throws InvalidColourSet unless |I| = 3; NotAComponent unless `component` is exactly one
/// component of G_I.
EmbeddedResidue genus_of_residue(const ColourfulGraph& g, ColourSet colours,
                                 std::span<const Vertex> component);

/// Every component of G_I for one 3-set I.
std::vector<EmbeddedResidue> embedded_residues(const ColourfulGraph& g, ColourSet colours);

/// A 3-residue of positive genus, if any.
struct GenusWitness {
  ColourSet colours;
  Vertex min_vertex = 0;
  std::size_t genus = 0;
};

/// First positive-genus 3-residue in (colour set bitmask, min vertex) order.
std::optional<GenusWitness> find_nonplanar_residue(const ColourfulGraph& g);

/// Property (P): every component of every 3-coloured residue is planar. Always true for d < 2.
bool has_property_P(const ColourfulGraph& g);

/// Number of bicoloured {a,b}-cycles of G (cycles of matching(a) o matching(b)^-1).
std::size_t bicoloured_cycles(const ColourfulGraph& g, int a, int b);

}  // namespace coltri
