#include "coltri/constructions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace coltri {

namespace {

// Representative of m (mod d) in [1..d].
int mod_colour(std::size_t m, int d) {
  return static_cast<int>((m + static_cast<std::size_t>(d) - 1) % static_cast<std::size_t>(d)) + 1;
}

bool is_permutation_of(const Permutation& p, std::size_t k) {
  if (p.size() != k) return false;
  std::vector<bool> seen(k, false);
  for (auto x : p) {
    if (x >= k || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool preserves_parity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((p[i] % 2) != (i % 2)) return false;
  }
  return true;
}

}  // namespace

std::string PartialGraph::name(Vertex v) const {
  static constexpr const char* kRows[] = {"a", "a'", "b", "b'"};
  return kRows[v / length()] + std::to_string(v % length() + 1);
}

std::size_t PartialGraph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) {
    return e.u == v || e.v == v;
  }));
}

std::vector<int> PartialGraph::colours_at(Vertex v) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.u == v || e.v == v) out.push_back(e.colour);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PartialGraph build_G0(int d, std::size_t k) {
  if (d < 3) throw BadParams("construction needs d >= 3");
  if (k < 1) throw BadParams("construction needs k >= 1");
  using Row = PartialGraph::Row;
  PartialGraph g;
  g.d = d;
  g.k = k;
  const std::size_t len = g.length();
  const Row rows[] = {Row::A, Row::APrime, Row::B, Row::BPrime};

  // horizontal path edges x_i x_{i+1}, colour i+1 (mod d)
  for (Row row : rows) {
    for (std::size_t i = 1; i < len; ++i) {
      g.edges.push_back({g.label(row, i), g.label(row, i + 1), mod_colour(i + 1, d)});
    }
  }
  g.edges.push_back({g.label(Row::A, 1), g.label(Row::APrime, 1), 1});
  g.edges.push_back({g.label(Row::B, 1), g.label(Row::BPrime, 1), 1});

  // vertical edges in colours [1..d]: at position i, every colour except i and i+1 (mod d),
  // which the horizontal edges at x_i already use
  for (std::size_t i = 1; i <= len; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (j == mod_colour(i, d) || j == mod_colour(i + 1, d)) continue;
      g.edges.push_back({g.label(Row::A, i), g.label(Row::B, i), j});
      g.edges.push_back({g.label(Row::APrime, i), g.label(Row::BPrime, i), j});
    }
  }
  g.edges.push_back({g.label(Row::A, len), g.label(Row::B, len), 1});
  g.edges.push_back({g.label(Row::APrime, len), g.label(Row::BPrime, len), 1});

  // colour-(d+1) verticals away from the multiples of d
  for (std::size_t i = 1; i <= len; ++i) {
    if (i % static_cast<std::size_t>(d) == 0) continue;
    g.edges.push_back({g.label(Row::A, i), g.label(Row::B, i), d + 1});
    g.edges.push_back({g.label(Row::APrime, i), g.label(Row::BPrime, i), d + 1});
  }
  return g;
}

bool params_admissible(const ConstructionParams& params) {
  if (params.d < 3 || params.k < 1) return false;
  if (!is_permutation_of(params.sigma, params.k) || !is_permutation_of(params.tau, params.k)) {
    return false;
  }
  if (params.d % 2 == 1) return preserves_parity(params.sigma) && preserves_parity(params.tau);
  return true;
}

ManifoldConstruction build_manifold(const ConstructionParams& params) {
  auto g0 = build_G0(params.d, params.k);
  if (!is_permutation_of(params.sigma, params.k) || !is_permutation_of(params.tau, params.k)) {
    throw BadParams("sigma and tau must be permutations of length k=" + std::to_string(params.k));
  }
  if (params.d % 2 == 1 && !(preserves_parity(params.sigma) && preserves_parity(params.tau))) {
    throw BadParams("for odd d, sigma and tau must map odd positions to odd positions "
                    "(otherwise the graph is not bipartite)");
  }
  using Row = PartialGraph::Row;
  const auto d = static_cast<std::size_t>(params.d);
  for (std::size_t i = 1; i <= params.k; ++i) {
    const std::size_t s = params.sigma[i - 1] + 1;
    const std::size_t t = params.tau[i - 1] + 1;
    g0.edges.push_back({g0.label(Row::A, i * d), g0.label(Row::APrime, s * d), params.d + 1});
    g0.edges.push_back({g0.label(Row::B, i * d), g0.label(Row::BPrime, t * d), params.d + 1});
  }
  std::vector<Vertex> vertex_of;
  auto graph = ColourfulGraph::from_edge_list(params.d, g0.order(), g0.edges, &vertex_of);
  return {params, std::move(graph), std::move(vertex_of)};
}

ConstructionParams random_params(int d, std::size_t k, Rng& rng) {
  ConstructionParams p{d, k, {}, {}};
  auto draw = [&]() {
    if (d % 2 == 0) return random_permutation(k, rng);
    // independent uniform permutations of the even and the odd positions
    const std::size_t evens = (k + 1) / 2;
    const std::size_t odds = k / 2;
    const auto pe = random_permutation(evens, rng);
    const auto po = random_permutation(odds, rng);
    Permutation out(k);
    for (std::size_t i = 0; i < evens; ++i) out[2 * i] = 2 * pe[i];
    for (std::size_t i = 0; i < odds; ++i) out[2 * i + 1] = 2 * po[i] + 1;
    return out;
  };
  p.sigma = draw();
  p.tau = draw();
  return p;
}

ColourfulGraph build_planar_family(const ManifoldConstruction& g3, int target_d) {
  if (g3.params.d != 3 || g3.graph.dim() != 3) {
    throw NotAConstructionGraph("planar family extends a d=3 construction graph");
  }
  if (target_d < 4) throw BadParams("target dimension must be at least 4");
  if (target_d + 1 > ColourSet::kMaxColours) throw BadParams("target dimension too large");
  const auto& g = g3.graph;
  std::vector<Permutation> matchings(g.matchings().begin(), g.matchings().end());

  const std::size_t len = g3.params.k * 3;
  const std::size_t half = g.half();
  Permutation vertical(half, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t row : {0u, 1u}) {  // a with b, a' with b'
    for (std::size_t i = 0; i < len; ++i) {
      Vertex x = g3.vertex_of.at(row * len + i);
      Vertex y = g3.vertex_of.at((row + 2) * len + i);
      if (!g.is_white(x)) std::swap(x, y);
      if (!g.is_white(x) || g.is_white(y)) throw NotAConstructionGraph("vertical pair not bipartite");
      vertical[x] = static_cast<std::uint32_t>(y - half);
    }
  }
  for (int c = 5; c <= target_d + 1; ++c) matchings.push_back(vertical);
  return ColourfulGraph::from_matchings(target_d, std::move(matchings));
}

mpz_class family_size_lower_bound(int d, std::size_t k) {
  if (d < 3 || k < 1) throw BadParams("need d >= 3 and k >= 1");
  mpz_class kf;
  mpz_class nf;
  mpz_fac_ui(kf.get_mpz_t(), k);
  mpz_fac_ui(nf.get_mpz_t(), 4 * k * static_cast<std::size_t>(d));
  mpz_class out = kf * kf * nf;
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), 4);
  return out;
}

std::size_t coloured_automorphism_count(const ColourfulGraph& g) {
  if (!g.is_connected()) throw Disconnected("automorphism count needs a connected graph");
  constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();
  std::size_t count = 0;
  std::vector<Vertex> image(g.order());
  std::vector<bool> used(g.order());
  std::vector<Vertex> stack;
  for (Vertex target = 0; target < g.order(); ++target) {
    std::fill(image.begin(), image.end(), kUnset);
    std::fill(used.begin(), used.end(), false);
    image[0] = target;
    used[target] = true;
    stack.assign(1, 0);
    bool ok = true;
    while (ok && !stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (int c = 1; c <= g.colour_count() && ok; ++c) {
        const Vertex u = g.neighbour(v, c);
        const Vertex mapped = g.neighbour(image[v], c);
        if (image[u] == kUnset) {
          if (used[mapped]) {
            ok = false;
          } else {
            image[u] = mapped;
            used[mapped] = true;
            stack.push_back(u);
          }
        } else if (image[u] != mapped) {
          ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

Permutation parse_permutation(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  Permutation p;
  long long value = 0;
  while (in >> value) {
    if (value < 1) throw BadParams("permutation entries are 1-based positive integers");
    p.push_back(static_cast<std::uint32_t>(value - 1));
  }
  if (!in.eof()) throw BadParams("cannot parse permutation '" + std::string(text) + "'");
  if (!is_permutation_of(p, p.size())) {
    throw BadParams("'" + std::string(text) + "' is not a permutation");
  }
  return p;
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(p[i] + 1);
  }
  return out;
}

std::size_t cycles_of_sigma_tau_inverse(const Permutation& sigma, const Permutation& tau) {
  return cycle_count(compose_inverse(sigma, tau));
}

}  // namespace coltri
