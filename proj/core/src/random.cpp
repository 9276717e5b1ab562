#include "coltri/random.hpp"

#include <numeric>
#include <string>

namespace coltri {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low residue band so every value mod bound is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

Permutation random_permutation(std::size_t size, Rng& rng) {
  Permutation p(size);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = size; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

ColourfulGraph random_graph(int d, std::size_t n, Rng& rng) {
  if (n == 0 || n % 2 != 0) throw OddN("n must be even and positive, got " + std::to_string(n));
  std::vector<Permutation> matchings;
  matchings.reserve(static_cast<std::size_t>(d + 1));
  for (int c = 0; c <= d; ++c) matchings.push_back(random_permutation(n / 2, rng));
  return ColourfulGraph::from_matchings(d, std::move(matchings));
}

ColourfulGraph random_graph(int d, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_graph(d, n, rng);
}

}  // namespace coltri
