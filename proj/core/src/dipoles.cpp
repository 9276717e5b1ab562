#include "coltri/dipoles.hpp"

#include <sstream>
#include <unordered_set>

#include "coltri/cgf.hpp"

namespace coltri {

std::vector<DipoleMove> find_dipoles(const ColourfulGraph& g) {
  std::vector<DipoleMove> out;
  if (g.half() < 2) return out;
  const int colours = g.colour_count();
  for (Vertex w = 0; w < g.half(); ++w) {
    // A dipole partner must be the colour-1 or colour-2 neighbour.
    for (int probe = 1; probe <= 2; ++probe) {
      const Vertex b = g.neighbour(w, probe);
      if (probe == 2 && b == g.neighbour(w, 1)) continue;
      int missing = 0;
      int missing_colour = 0;
      for (int c = 1; c <= colours && missing <= 1; ++c) {
        if (g.neighbour(w, c) != b) {
          ++missing;
          missing_colour = c;
        }
      }
      if (missing == 1) {
        out.push_back({w, b, missing_colour});
      }
    }
  }
  return out;
}

ColourfulGraph remove_dipole(const ColourfulGraph& g, const DipoleMove& move) {
  if (g.half() < 2) throw InvalidMove("the 2-vertex dipole has no removable dipole");
  if (move.white >= g.half() || move.black < g.half() || move.black >= g.order()) {
    throw InvalidMove("move endpoints must be a white and a black vertex");
  }
  if (move.free_colour < 1 || move.free_colour > g.colour_count()) {
    throw InvalidMove("free colour out of range");
  }
  for (int c = 1; c <= g.colour_count(); ++c) {
    const bool joined = g.neighbour(move.white, c) == move.black;
    if (joined == (c == move.free_colour)) {
      throw InvalidMove("vertices are not joined by exactly the colours other than " +
                        std::to_string(move.free_colour));
    }
  }

  const std::uint32_t w = move.white;
  const std::uint32_t b = move.black - static_cast<std::uint32_t>(g.half());
  const std::size_t half = g.half();
  // outside endpoints of the two free-colour edges
  const std::uint32_t outer_white = g.inverse_matching(move.free_colour)[b];
  const std::uint32_t outer_black = g.matching(move.free_colour)[w];

  auto shift_white = [w](std::uint32_t x) { return x > w ? x - 1 : x; };
  auto shift_black = [b](std::uint32_t x) { return x > b ? x - 1 : x; };

  std::vector<Permutation> forward;
  forward.reserve(static_cast<std::size_t>(g.colour_count()));
  for (int c = 1; c <= g.colour_count(); ++c) {
    const auto m = g.matching(c);
    Permutation p(half - 1);
    for (std::uint32_t x = 0; x < half; ++x) {
      if (x == w) continue;
      std::uint32_t target = m[x];
      if (c == move.free_colour && x == outer_white) target = outer_black;
      p[shift_white(x)] = shift_black(target);
    }
    forward.push_back(std::move(p));
  }
  return ColourfulGraph::from_matchings(g.dim(), std::move(forward));
}

ReductionTrace melonic_reduce(const ColourfulGraph& g) {
  if (!g.is_connected()) throw Disconnected("melonic reduction needs a connected graph");
  ReductionTrace trace{{}, g, false};
  while (trace.terminal.half() > 1) {
    const auto dipoles = find_dipoles(trace.terminal);
    if (dipoles.empty()) break;
    trace.terminal = remove_dipole(trace.terminal, dipoles.front());
    trace.moves.push_back(dipoles.front());
  }
  trace.reached_dipole = trace.terminal.half() == 1;
  return trace;
}

namespace {

struct Search {
  std::size_t max_states;
  std::unordered_set<std::string> visited;
  std::vector<DipoleMove> path;

  std::optional<ColourfulGraph> run(const ColourfulGraph& g) {
    if (g.half() == 1) return g;
    if (visited.size() >= max_states) return std::nullopt;
    if (!visited.insert(to_cgf(g)).second) return std::nullopt;
    for (const auto& move : find_dipoles(g)) {
      path.push_back(move);
      if (auto done = run(remove_dipole(g, move))) return done;
      path.pop_back();
      if (visited.size() >= max_states) break;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<ReductionTrace> melonic_search(const ColourfulGraph& g, std::size_t max_states) {
  if (!g.is_connected()) throw Disconnected("melonic reduction needs a connected graph");
  Search search{max_states, {}, {}};
  auto terminal = search.run(g);
  if (!terminal) return std::nullopt;
  return ReductionTrace{std::move(search.path), std::move(*terminal), true};
}

bool replay_trace(const ColourfulGraph& initial, const ReductionTrace& trace) {
  ColourfulGraph current = initial;
  try {
    for (const auto& move : trace.moves) current = remove_dipole(current, move);
  } catch (const InvalidMove&) {
    return false;
  }
  if (!(current == trace.terminal)) return false;
  return !trace.reached_dipole || current.half() == 1;
}

std::string format_moves(const std::vector<DipoleMove>& moves) {
  std::ostringstream out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i != 0) out << ' ';
    out << '(' << moves[i].white + 1 << ',' << moves[i].black + 1 << ','
        << moves[i].free_colour << ')';
  }
  return out.str();
}

}  // namespace coltri
