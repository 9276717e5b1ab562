#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coltri/colourful_graph.hpp"

namespace coltri {

/// A white/black pair joined by exactly d parallel edges, i.e. every colour but `free_colour`.
/// Vertex ids refer to the graph the move is applied to.
struct DipoleMove {
  Vertex white = 0;
  Vertex black = 0;
  int free_colour = 0;

  friend bool operator==(const DipoleMove&, const DipoleMove&) = default;
};

/// Moves are recorded in the labelling of the graph they were applied to; remove_dipole
/// renumbers the survivors order-preservingly on each side.
struct ReductionTrace {
  std::vector<DipoleMove> moves;
  ColourfulGraph terminal;
  bool reached_dipole = false;
};

/// Every dipole of G, ordered by white vertex. Empty for the 2-vertex graph.
std::vector<DipoleMove> find_dipoles(const ColourfulGraph& g);

/// Deletes the pair and splices their free-colour edges. Throws InvalidMove.
ColourfulGraph remove_dipole(const ColourfulGraph& g, const DipoleMove& move);

/// Greedy reduction, always taking the dipole at the lowest-numbered white vertex.
/// Throws Disconnected.
ReductionTrace melonic_reduce(const ColourfulGraph& g);

/// Backtracking over move orders; visits at most `max_states` distinct graphs. Returns a
/// trace ending at the dipole, or nullopt when none was found within the cap.
std::optional<ReductionTrace> melonic_search(const ColourfulGraph& g, std::size_t max_states = 64);

/// Replays a trace from `initial`; true iff every move is valid and the result is `terminal`.
bool replay_trace(const ColourfulGraph& initial, const ReductionTrace& trace);

/// "(w,b,free_colour) ..." with 1-based vertex ids; empty string for an empty trace.
std::string format_moves(const std::vector<DipoleMove>& moves);

}  // namespace coltri
