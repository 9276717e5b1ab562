#pragma once

#include <cstdint>
#include <random>

#include "coltri/colourful_graph.hpp"

namespace coltri {

/// Reproducible randomness: std::mt19937_64 (its output sequence is fixed by the C++ standard)
/// with rejection-sampled bounded integers, so results are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

/// Uniform permutation of [0, size) by Fisher-Yates (swap i with below(i+1), i descending).
Permutation random_permutation(std::size_t size, Rng& rng);

/// d+1 independent uniform bijections on n/2 points. Throws OddN for odd or zero n.
ColourfulGraph random_graph(int d, std::size_t n, std::uint64_t seed);
ColourfulGraph random_graph(int d, std::size_t n, Rng& rng);

}  // namespace coltri
