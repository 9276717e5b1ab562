#pragma once

// Slow census: every tuple of d+1 perfect matchings on the labelled set {0..n-1}, keeping
// the bipartite ones. No symmetry is used.

#include <gmpxx.h>

#include <array>

#include "coltri/census.hpp"
#include "support.hpp"

namespace coltri::testing {

struct OracleCounts {
  std::array<mpz_class, kCensusClassCount> labelled{};
  // Sum over labelled graphs of 2^components: the number of (graph, vertex colouring) pairs.
  std::array<mpz_class, kCensusClassCount> coloured{};
};

inline OracleCounts naive_census(int d, std::size_t n) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings;
  all_perfect_matchings(n, matchings);
  OracleCounts out;
  std::vector<std::size_t> digits(static_cast<std::size_t>(d + 1), 0);
  while (true) {
    std::vector<ColourfulGraph::Edge> edges;
    for (std::size_t c = 0; c < digits.size(); ++c) {
      for (auto [u, v] : matchings[digits[c]]) edges.push_back({u, v, static_cast<int>(c + 1)});
    }
    try {
      const auto g = ColourfulGraph::from_edge_list(d, n, edges);
      const auto cls = classify(g);
      for (std::size_t i = 0; i < kCensusClassCount; ++i) {
        if (!cls.member[i]) continue;
        out.labelled[i] += 1;
        mpz_class weight = 1;
        weight <<= cls.components;
        out.coloured[i] += weight;
      }
    } catch (const NotBipartite&) {
    }
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == matchings.size()) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return out;
}

}  // namespace coltri::testing
