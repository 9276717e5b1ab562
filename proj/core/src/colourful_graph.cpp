#include "coltri/colourful_graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <string>

#include "disjoint_sets.hpp"

namespace coltri {

// ---------------------------------------------------------------------------------------------
// ColourSet

ColourSet ColourSet::of(std::initializer_list<int> colours) {
  return of(std::vector<int>(colours));
}

ColourSet ColourSet::of(const std::vector<int>& colours) {
  std::uint32_t bits = 0;
  for (int c : colours) {
    if (c < 1 || c > kMaxColours) {
      throw InvalidColourSet("colour " + std::to_string(c) + " out of range");
    }
    bits |= 1u << (c - 1);
  }
  return ColourSet(bits);
}

std::vector<int> ColourSet::colours() const {
  std::vector<int> out;
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string ColourSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int c : colours()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

std::vector<ColourSet> subsets_of_size(ColourSet universe, int size) {
  std::vector<ColourSet> out;
  for (ColourSet s : all_subsets(universe)) {
    if (s.size() == size) out.push_back(s);
  }
  return out;
}

std::vector<ColourSet> all_subsets(ColourSet universe) {
  // Enumerate submasks in increasing order.
  std::vector<ColourSet> out;
  const std::uint32_t u = universe.bits();
  std::uint32_t s = 0;
  while (true) {
    out.emplace_back(s);
    if (s == u) break;
    s = (s - u) & u;
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// ColourfulGraph

namespace {

void check_bijection(const Permutation& p, std::size_t half, int colour) {
  if (p.size() != half) {
    throw LengthMismatch("matching for colour " + std::to_string(colour) + " has " +
                         std::to_string(p.size()) + " entries, expected " + std::to_string(half));
  }
  std::vector<bool> seen(half, false);
  for (std::size_t w = 0; w < half; ++w) {
    const auto b = p[w];
    if (b >= half) {
      throw NotABijection("matching for colour " + std::to_string(colour) + " maps white " +
                          std::to_string(w + 1) + " outside the black side");
    }
    if (seen[b]) {
      throw NotABijection("matching for colour " + std::to_string(colour) +
                          " repeats black vertex " + std::to_string(half + b + 1));
    }
    seen[b] = true;
  }
}

}  // namespace

ColourfulGraph::ColourfulGraph(int d, std::vector<Permutation> forward)
    : d_(d), half_(forward.front().size()), forward_(std::move(forward)) {
  inverse_.reserve(forward_.size());
  for (const auto& p : forward_) {
    Permutation inv(half_);
    for (std::uint32_t w = 0; w < half_; ++w) inv[p[w]] = w;
    inverse_.push_back(std::move(inv));
  }
}

ColourfulGraph ColourfulGraph::from_matchings(int d, std::vector<Permutation> matchings) {
  if (d < 1 || d + 1 > ColourSet::kMaxColours) {
    throw LengthMismatch("dimension " + std::to_string(d) + " out of range");
  }
  if (matchings.size() != static_cast<std::size_t>(d + 1)) {
    throw LengthMismatch("expected " + std::to_string(d + 1) + " matchings, got " +
                         std::to_string(matchings.size()));
  }
  const std::size_t half = matchings.front().size();
  if (half == 0) throw LengthMismatch("graph must have at least two vertices");
  for (std::size_t c = 0; c < matchings.size(); ++c) {
    check_bijection(matchings[c], half, static_cast<int>(c + 1));
  }
  return ColourfulGraph(d, std::move(matchings));
}

ColourfulGraph ColourfulGraph::from_edge_list(int d, std::size_t n, std::span<const Edge> edges,
                                              std::vector<Vertex>* label_of) {
  if (n == 0 || n % 2 != 0) throw LengthMismatch("vertex count must be even and positive");
  const int colours = d + 1;
  // adjacency per colour; each colour must be a perfect matching
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<std::vector<Vertex>> partner(static_cast<std::size_t>(colours),
                                           std::vector<Vertex>(n, kNone));
  for (const auto& e : edges) {
    if (e.colour < 1 || e.colour > colours) {
      throw InvalidColourSet("edge colour " + std::to_string(e.colour) + " out of range");
    }
    if (e.u >= n || e.v >= n) throw LengthMismatch("edge endpoint out of range");
    if (e.u == e.v) throw NotBipartite("loop at vertex " + std::to_string(e.u));
    auto& p = partner[static_cast<std::size_t>(e.colour - 1)];
    if (p[e.u] != kNone || p[e.v] != kNone) {
      throw NotABijection("colour " + std::to_string(e.colour) + " used twice at a vertex");
    }
    p[e.u] = e.v;
    p[e.v] = e.u;
  }
  for (int c = 0; c < colours; ++c) {
    for (std::size_t v = 0; v < n; ++v) {
      if (partner[static_cast<std::size_t>(c)][v] == kNone) {
        throw LengthMismatch("vertex " + std::to_string(v) + " misses colour " +
                             std::to_string(c + 1));
      }
    }
  }

  // 2-colour by BFS from the smallest unvisited label
  std::vector<int> side(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (const auto& p : partner) {
        const Vertex u = p[v];
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          queue.push(u);
        } else if (side[u] == side[v]) {
          throw NotBipartite("odd cycle through vertex " + std::to_string(u));
        }
      }
    }
  }

  std::vector<Vertex> local(n);
  std::uint32_t whites = 0;
  std::uint32_t blacks = 0;
  for (std::size_t v = 0; v < n; ++v) local[v] = side[v] == 0 ? whites++ : blacks++;
  if (whites != blacks) throw NotBipartite("unbalanced bipartition");

  std::vector<Permutation> forward(static_cast<std::size_t>(colours), Permutation(whites));
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] != 0) continue;
    for (int c = 0; c < colours; ++c) {
      forward[static_cast<std::size_t>(c)][local[v]] = local[partner[static_cast<std::size_t>(c)][v]];
    }
  }
  if (label_of != nullptr) {
    label_of->resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      (*label_of)[v] = side[v] == 0 ? local[v] : whites + local[v];
    }
  }
  return from_matchings(d, std::move(forward));
}

int ColourfulGraph::multiplicity(Vertex w, Vertex b) const {
  int count = 0;
  for (int c = 1; c <= colour_count(); ++c) {
    if (neighbour(w, c) == b) ++count;
  }
  return count;
}

std::vector<ColourfulGraph::Edge> ColourfulGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(half_ * forward_.size());
  for (int c = 1; c <= colour_count(); ++c) {
    for (Vertex w = 0; w < half_; ++w) out.push_back({w, neighbour(w, c), c});
  }
  return out;
}

ColourfulGraph ColourfulGraph::restrict_to(ColourSet colours,
                                           std::span<const Vertex> component) const {
  if (colours.empty() || !colours.within(colour_count())) {
    throw InvalidColourSet("colour set " + colours.to_string() + " invalid for d=" +
                           std::to_string(d_));
  }
  constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(order(), kAbsent);
  std::uint32_t whites = 0;
  std::uint32_t blacks = 0;
  std::vector<Vertex> sorted(component.begin(), component.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    if (v >= order()) throw NotAComponent("vertex out of range");
    if (index[v] != kAbsent) throw NotAComponent("repeated vertex");
    index[v] = is_white(v) ? whites++ : blacks++;
  }
  if (whites != blacks || whites == 0) throw NotAComponent("vertex set is not balanced");

  const auto cs = colours.colours();
  std::vector<Permutation> forward(cs.size(), Permutation(whites));
  for (Vertex v : sorted) {
    if (!is_white(v)) continue;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Vertex u = neighbour(v, cs[i]);
      if (index[u] == kAbsent) {
        throw NotAComponent("vertex set is not closed under colour " + std::to_string(cs[i]));
      }
      forward[i][index[v]] = index[u];
    }
  }
  return from_matchings(static_cast<int>(cs.size()) - 1, std::move(forward));
}

ColourfulGraph ColourfulGraph::without_colour(int colour) const {
  if (colour < 1 || colour > colour_count() || d_ < 2) {
    throw InvalidColourSet("cannot delete colour " + std::to_string(colour));
  }
  std::vector<Permutation> forward;
  for (int c = 1; c <= colour_count(); ++c) {
    if (c != colour) forward.push_back(forward_[static_cast<std::size_t>(c - 1)]);
  }
  return from_matchings(d_ - 1, std::move(forward));
}

bool ColourfulGraph::is_connected() const {
  detail::DisjointSets sets(order());
  for (int c = 1; c <= colour_count(); ++c) {
    for (Vertex w = 0; w < half_; ++w) sets.unite(w, neighbour(w, c));
  }
  return sets.sets() == 1;
}

std::size_t cycle_count(std::span<const std::uint32_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t x = start; !seen[x]; x = perm[x]) seen[x] = true;
  }
  return cycles;
}

Permutation compose_inverse(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  Permutation b_inv(b.size());
  for (std::uint32_t i = 0; i < b.size(); ++i) b_inv[b[i]] = i;
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b_inv[x]];
  return out;
}

}  // namespace coltri
