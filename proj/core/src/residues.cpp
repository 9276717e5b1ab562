#include "coltri/residues.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "disjoint_sets.hpp"

namespace coltri {

namespace {

void require_valid(const ColourfulGraph& g, ColourSet colours) {
  if (!colours.within(g.colour_count())) {
    throw InvalidColourSet("colour set " + colours.to_string() + " not within [1.." +
                           std::to_string(g.colour_count()) + "]");
  }
}

detail::DisjointSets union_colours(const ColourfulGraph& g, ColourSet colours) {
  detail::DisjointSets sets(g.order());
  for (int c : colours.colours()) {
    const auto m = g.matching(c);
    for (Vertex w = 0; w < g.half(); ++w) sets.unite(w, g.black(m[w]));
  }
  return sets;
}

}  // namespace

ResiduePartition residues(const ColourfulGraph& g, ColourSet colours) {
  require_valid(g, colours);
  auto sets = union_colours(g, colours);

  ResiduePartition out;
  out.colours = colours;
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  out.component_of.assign(g.order(), kUnset);
  std::vector<std::uint32_t> index_of_root(g.order(), kUnset);
  // Scanning vertices in increasing order numbers components by their minimum vertex.
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto root = sets.find(v);
    if (index_of_root[root] == kUnset) {
      index_of_root[root] = static_cast<std::uint32_t>(out.components.size());
      out.components.emplace_back();
    }
    const auto idx = index_of_root[root];
    out.component_of[v] = idx;
    out.components[idx].push_back(v);
  }
  return out;
}

std::size_t kappa(const ColourfulGraph& g, ColourSet colours) {
  require_valid(g, colours);
  return union_colours(g, colours).sets();
}

KappaTable::KappaTable(const ColourfulGraph& g) : colour_count_(g.colour_count()) {
  const std::size_t subsets = std::size_t{1} << colour_count_;
  kappa_.resize(subsets);
  for (std::size_t bits = 0; bits < subsets; ++bits) {
    const ColourSet j(static_cast<std::uint32_t>(bits));
    if (j.size() == 2) {
      const auto cs = j.colours();
      kappa_[bits] = bicoloured_cycles(g, cs[0], cs[1]);
    } else {
      kappa_[bits] = kappa(g, j);
    }
  }
}

KappaTable kappa_table(const ColourfulGraph& g) { return KappaTable(g); }

std::size_t kappa_r(const KappaTable& table, ColourSet colours, int r) {
  if (!colours.within(table.colour_count())) {
    throw InvalidColourSet("colour set " + colours.to_string() + " invalid");
  }
  if (r < 0 || r > colours.size()) {
    throw RangeError("r=" + std::to_string(r) + " outside [0.." + std::to_string(colours.size()) +
                     "]");
  }
  std::size_t total = 0;
  for (ColourSet j : subsets_of_size(colours, r)) total += table(j);
  return total;
}

std::size_t kappa_r(const ColourfulGraph& g, ColourSet colours, int r) {
  require_valid(g, colours);
  if (r < 0 || r > colours.size()) {
    throw RangeError("r=" + std::to_string(r) + " outside [0.." + std::to_string(colours.size()) +
                     "]");
  }
  std::size_t total = 0;
  for (ColourSet j : subsets_of_size(colours, r)) total += kappa(g, j);
  return total;
}

std::vector<std::size_t> f_vector(const ColourfulGraph& g, ColourSet colours) {
  require_valid(g, colours);
  if (colours.empty()) throw InvalidColourSet("f-vector needs a non-empty colour set");
  const int top = colours.size() - 1;
  std::vector<std::size_t> f(static_cast<std::size_t>(top + 1));
  for (int s = 0; s <= top; ++s) f[static_cast<std::size_t>(s)] = kappa_r(g, colours, top - s);
  return f;
}

std::size_t bicoloured_cycles(const ColourfulGraph& g, int a, int b) {
  return cycle_count(compose_inverse(g.matching(a), g.matching(b)));
}

namespace {

// Faces of the residue containing the given whites: {a,b}-cycles restricted to the component.
std::size_t faces_within(const ColourfulGraph& g, const std::vector<int>& cs,
                         std::span<const Vertex> component) {
  std::vector<bool> seen(g.half(), false);
  std::size_t faces = 0;
  for (std::size_t x = 0; x < cs.size(); ++x) {
    for (std::size_t y = x + 1; y < cs.size(); ++y) {
      const auto ma = g.matching(cs[x]);
      const auto ib = g.inverse_matching(cs[y]);
      for (Vertex v : component) {
        if (!g.is_white(v) || seen[v]) continue;
        ++faces;
        for (Vertex w = v; !seen[w]; w = ib[ma[w]]) seen[w] = true;
      }
      for (Vertex v : component) {
        if (g.is_white(v)) seen[v] = false;
      }
    }
  }
  return faces;
}

}  // namespace

EmbeddedResidue genus_of_residue(const ColourfulGraph& g, ColourSet colours,
                                 std::span<const Vertex> component) {
  require_valid(g, colours);
  if (colours.size() != 3) throw InvalidColourSet("genus needs exactly three colours");
  if (component.empty()) throw NotAComponent("empty vertex set");

  // Exactly one component: same residue for every vertex and the whole residue present.
  const auto part = residues(g, colours);
  std::vector<Vertex> sorted(component.begin(), component.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= g.order()) throw NotAComponent("vertex out of range");
  const auto idx = part.component_of[sorted.front()];
  if (part.components[idx] != sorted) {
    throw NotAComponent("vertex set is not a component of G_" + colours.to_string());
  }

  EmbeddedResidue out;
  out.component = std::move(sorted);
  out.colours = colours;
  out.vertices = out.component.size();
  out.edges = 3 * out.vertices / 2;
  out.faces = faces_within(g, colours.colours(), out.component);
  const auto euler = static_cast<long long>(out.vertices) - static_cast<long long>(out.edges) +
                     static_cast<long long>(out.faces);
  // Orientable closed surface: V - E + F = 2 - 2 genus.
  out.genus = static_cast<std::size_t>((2 - euler) / 2);
  return out;
}

std::vector<EmbeddedResidue> embedded_residues(const ColourfulGraph& g, ColourSet colours) {
  require_valid(g, colours);
  if (colours.size() != 3) throw InvalidColourSet("genus needs exactly three colours");
  const auto cs = colours.colours();
  const auto part = residues(g, colours);
  std::vector<EmbeddedResidue> out;
  out.reserve(part.count());
  for (const auto& comp : part.components) {
    EmbeddedResidue r;
    r.component = comp;
    r.colours = colours;
    r.vertices = comp.size();
    r.edges = 3 * r.vertices / 2;
    r.faces = faces_within(g, cs, comp);
    const auto euler = static_cast<long long>(r.vertices) - static_cast<long long>(r.edges) +
                       static_cast<long long>(r.faces);
    r.genus = static_cast<std::size_t>((2 - euler) / 2);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<GenusWitness> find_nonplanar_residue(const ColourfulGraph& g) {
  if (g.colour_count() < 3) return std::nullopt;
  for (ColourSet triple : subsets_of_size(g.all_colours(), 3)) {
    // Fast reject via Euler-Poincare: all genus 0 iff kappa^(0) - kappa^(1) + kappa^(2) = 2 kappa_I.
    const auto cs = triple.colours();
    const std::size_t faces = bicoloured_cycles(g, cs[0], cs[1]) +
                              bicoloured_cycles(g, cs[0], cs[2]) +
                              bicoloured_cycles(g, cs[1], cs[2]);
    const std::size_t n = g.order();
    if (n + faces == 3 * n / 2 + 2 * kappa(g, triple)) continue;
    for (const auto& r : embedded_residues(g, triple)) {
      if (r.genus > 0) return GenusWitness{triple, r.component.front(), r.genus};
    }
  }
  return std::nullopt;
}

bool has_property_P(const ColourfulGraph& g) { return !find_nonplanar_residue(g).has_value(); }

}  // namespace coltri
