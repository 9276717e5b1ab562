#pragma once

// Fixtures and slow reference implementations shared by the test binaries. Nothing here
// calls the library's component or rank code, so the oracles stay independent.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "coltri/colourful_graph.hpp"

namespace coltri::testing {

inline Permutation identity(std::size_t size) {
  Permutation p(size);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline ColourfulGraph dipole(int d) {
  return ColourfulGraph::from_matchings(d, std::vector<Permutation>(d + 1, Permutation{0}));
}

// Two balls of two tetrahedra glued by colour 4.
inline ColourfulGraph two_balls() {
  return ColourfulGraph::from_matchings(3, {{0, 1}, {0, 1}, {0, 1}, {1, 0}});
}

// d=2, matchings id, c, c^2 with c the 3-cycle.
inline ColourfulGraph torus() {
  return ColourfulGraph::from_matchings(2, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

// The torus matchings under colours 1..3 plus an identity colour 4.
inline ColourfulGraph torus_in_d3() {
  return ColourfulGraph::from_matchings(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
}

inline ColourfulGraph two_dipoles(int d) {
  return ColourfulGraph::from_matchings(d, std::vector<Permutation>(d + 1, Permutation{0, 1}));
}

// Plain adjacency lists over the edge list, one entry per coloured edge.
struct EdgeGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> adj;  // (neighbour, colour)

  explicit EdgeGraph(const ColourfulGraph& g) : n(g.order()), adj(g.order()) {
    for (const auto& e : g.edges()) {
      adj[e.u].push_back({e.v, e.colour});
      adj[e.v].push_back({e.u, e.colour});
    }
  }

  // Components of the subgraph keeping colours in `mask` (bit c-1 for colour c), by DFS.
  std::size_t components(std::uint32_t mask) const {
    std::vector<bool> seen(n, false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++count;
      std::vector<std::size_t> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (auto [v, c] : adj[u]) {
          if (((mask >> (c - 1)) & 1u) && !seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
    }
    return count;
  }

  // Cycles alternating colours a and b, found by walking.
  std::size_t alternating_cycles(int a, int b) const {
    auto step = [&](std::size_t u, int colour) {
      for (auto [v, c] : adj[u]) {
        if (c == colour) return v;
      }
      return n;
    };
    std::vector<bool> seen(n, false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++cycles;
      std::size_t u = s;
      int colour = a;
      do {
        seen[u] = true;
        u = step(u, colour);
        colour = colour == a ? b : a;
      } while (u != s || colour != a);
    }
    return cycles;
  }
};

// Dense rank over Q by Gaussian elimination on mpq_class.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Uniform random (d+1)-colourful graph from an independent generator.
inline ColourfulGraph sample_graph(int d, std::size_t half, std::mt19937& gen) {
  std::vector<Permutation> ms;
  for (int c = 0; c <= d; ++c) {
    auto p = identity(half);
    std::shuffle(p.begin(), p.end(), gen);
    ms.push_back(std::move(p));
  }
  return ColourfulGraph::from_matchings(d, std::move(ms));
}

// All perfect matchings of {0..n-1} as pair lists.
inline void all_perfect_matchings(std::size_t n, std::vector<std::vector<std::pair<Vertex, Vertex>>>& out) {
  std::vector<std::pair<Vertex, Vertex>> current;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    std::size_t u = 0;
    while (u < n && used[u]) ++u;
    if (u == n) {
      out.push_back(current);
      return;
    }
    used[u] = true;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      current.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      self(self);
      current.pop_back();
      used[v] = false;
    }
    used[u] = false;
  };
  rec(rec);
}

}  // namespace coltri::testing
