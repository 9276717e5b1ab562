#include "coltri/verdicts.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace coltri {

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes: return "yes";
    case Status::No: return "no";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

std::string Fraction::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Fraction make_fraction(long long num, long long den) {
  const long long g = std::gcd(num < 0 ? -num : num, den);
  return g > 1 ? Fraction{num / g, den / g} : Fraction{num, den};
}

const std::vector<Vertex>& component_containing(const ResiduePartition& part, Vertex v) {
  return part.components.at(part.component_of.at(v));
}

struct SphereProof {
  bool certified = false;
  std::vector<DipoleMove> moves;
};

// Melonic reduction of one residue, greedy first and then the bounded search.
SphereProof melonic_proof(const ColourfulGraph& residue, std::size_t search_states) {
  auto trace = melonic_reduce(residue);
  if (trace.reached_dipole) return {true, std::move(trace.moves)};
  if (search_states > 0) {
    if (auto found = melonic_search(residue, search_states)) return {true, std::move(found->moves)};
  }
  return {};
}

}  // namespace

// ---------------------------------------------------------------------------------------------

TopologyVerdict is_rational_homology_sphere(const ColourfulGraph& g, ColourSet colours,
                                            std::span<const Vertex> component) {
  if (colours.empty() || !colours.within(g.colour_count())) {
    throw InvalidColourSet("colour set " + colours.to_string() + " invalid");
  }
  const auto part = residues(g, colours);
  if (component.empty()) throw NotAComponent("empty vertex set");
  std::vector<Vertex> sorted(component.begin(), component.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= g.order() || component_containing(part, sorted.front()) != sorted) {
    throw NotAComponent("not a component of G_" + colours.to_string());
  }
  if (colours.size() == 1) {
    // A single edge: two points, the 0-sphere.
    return {Status::Yes, BettiCertificate{colours, sorted.front(), BettiVector{{2}}},
            "0-sphere convention"};
  }
  const auto complex = OrderComplex::build(g, colours, std::span<const Vertex>(sorted));
  auto betti = betti_numbers(complex);
  const bool sphere = betti.is_sphere(colours.size() - 1);
  return {sphere ? Status::Yes : Status::No,
          BettiCertificate{colours, sorted.front(), std::move(betti)}, "rational homology"};
}

bool euler_poincare_check(const ColourfulGraph& g, ColourSet colours) {
  if (colours.empty() || !colours.within(g.colour_count())) {
    throw InvalidColourSet("colour set " + colours.to_string() + " invalid");
  }
  const int top = colours.size() - 1;
  if (top % 2 != 0) throw OddDimension("Euler-Poincare identity needs |I|-1 even");
  const KappaTable table(g);
  long long sum = 0;
  for (int r = 0; r <= top; ++r) {
    const auto term = static_cast<long long>(kappa_r(table, colours, r));
    sum += r % 2 == 0 ? term : -term;
  }
  return sum == 2 * static_cast<long long>(table(colours));
}

TopologyVerdict is_sphere(const ColourfulGraph& g, const VerdictOptions& options) {
  if (!g.is_connected()) throw Disconnected("sphere recognition needs a connected graph");

  if (g.dim() == 2) {
    std::vector<Vertex> all(g.order());
    std::iota(all.begin(), all.end(), Vertex{0});
    const auto r = genus_of_residue(g, g.all_colours(), all);
    return {r.genus == 0 ? Status::Yes : Status::No,
            GenusCertificate{{g.all_colours(), 0, r.genus}}, "d=2 exact (genus)"};
  }

  auto trace = melonic_reduce(g);
  if (trace.reached_dipole) return {Status::Yes, MelonicCertificate{std::move(trace)}, "melonic"};

  if (auto witness = find_nonplanar_residue(g)) {
    return {Status::No, GenusCertificate{*witness}, "3-residue of positive genus"};
  }
  if (options.search_states > 0) {
    if (auto found = melonic_search(g, options.search_states)) {
      return {Status::Yes, MelonicCertificate{std::move(*found)}, "melonic (search)"};
    }
  }
  if (g.order() <= options.homology_vertex_limit) {
    auto betti = betti_numbers(g, g.all_colours());
    if (!betti.is_sphere(g.dim())) {
      return {Status::No, BettiCertificate{g.all_colours(), 0, std::move(betti)},
              "rational homology"};
    }
    return {Status::Unknown,
            UnknownReason{"rational homology sphere but no melonic reduction found"},
            "undecided"};
  }
  return {Status::Unknown, UnknownReason{"not melonic; homology check skipped (size limit)"},
          "undecided"};
}

TopologyVerdict is_manifold(const ColourfulGraph& g, const VerdictOptions& options) {
  if (g.dim() <= 2) {
    return {Status::Yes, ResidueSpheresCertificate{g.dim(), {}},
            "d<=2: every coloured triangulation is a manifold"};
  }

  if (auto witness = find_nonplanar_residue(g)) {
    return {Status::No, GenusCertificate{*witness},
            g.dim() == 3 ? "d=3 exact" : "3-residue of positive genus"};
  }

  ResidueSpheresCertificate certificate;
  certificate.max_size = g.dim();
  for (ColourSet triple : subsets_of_size(g.all_colours(), 3)) {
    for (const auto& comp : residues(g, triple).components) {
      certificate.entries.push_back({triple, comp.front(), 0, {}});
    }
  }
  if (g.dim() == 3) return {Status::Yes, std::move(certificate), "d=3 exact"};

  struct Pending {
    ColourSet colours;
    std::vector<Vertex> component;
  };
  std::vector<Pending> pending;
  for (int size = 4; size <= g.dim(); ++size) {
    for (ColourSet colours : subsets_of_size(g.all_colours(), size)) {
      for (const auto& comp : residues(g, colours).components) {
        auto proof = melonic_proof(g.restrict_to(colours, comp), options.search_states);
        if (proof.certified) {
          certificate.entries.push_back({colours, comp.front(), 0, std::move(proof.moves)});
        } else {
          pending.push_back({colours, comp});
        }
      }
    }
  }
  if (pending.empty()) return {Status::Yes, std::move(certificate), "all residues melonic"};

  for (const auto& p : pending) {
    if ((p.colours.size() - 1) % 2 != 0) continue;
    if (!euler_poincare_check(g, p.colours)) {
      const KappaTable table(g);
      long long sum = 0;
      for (int r = 0; r < p.colours.size(); ++r) {
        const auto term = static_cast<long long>(kappa_r(table, p.colours, r));
        sum += r % 2 == 0 ? term : -term;
      }
      return {Status::No,
              EulerPoincareCertificate{p.colours, sum, 2 * static_cast<long long>(table(p.colours))},
              "Euler-Poincare violated"};
    }
  }
  for (const auto& p : pending) {
    if (p.component.size() > options.homology_vertex_limit) continue;
    auto verdict = is_rational_homology_sphere(g, p.colours, p.component);
    if (verdict.status == Status::No) {
      verdict.method = "residue is not a rational homology sphere";
      return verdict;
    }
  }
  return {Status::Unknown,
          UnknownReason{std::to_string(pending.size()) +
                        " residue(s) are rational homology spheres without a melonic certificate"},
          "undecided"};
}

// ---------------------------------------------------------------------------------------------

Lemma1Witness lemma1_witness(const ColourfulGraph& g, ColourSet colours) {
  if (colours.size() != 3 || !colours.within(g.colour_count())) {
    throw InvalidColourSet("pair-gap witness needs a 3-colour set");
  }
  const auto cs = colours.colours();
  const auto whole = static_cast<long long>(kappa(g, colours));
  Lemma1Witness best;
  best.value = std::numeric_limits<long long>::max();
  for (std::size_t x = 0; x < cs.size(); ++x) {
    for (std::size_t y = x + 1; y < cs.size(); ++y) {
      const auto value = static_cast<long long>(bicoloured_cycles(g, cs[x], cs[y])) - whole;
      if (value < best.value) {
        best.value = value;
        best.i = cs[x];
        best.j = cs[y];
      }
    }
  }
  const auto n = static_cast<long long>(g.order());
  best.slack = make_fraction(n - 6 * best.value, 6);
  const auto embedded = embedded_residues(g, colours);
  best.hypothesis_holds = std::all_of(embedded.begin(), embedded.end(),
                                      [](const EmbeddedResidue& r) { return r.genus == 0; });
  return best;
}

Lemma2Witness lemma2_witness(const ColourfulGraph& g, ColourSet colours) {
  if (colours.size() != 5 || !colours.within(g.colour_count())) {
    throw InvalidColourSet("triple-gap witness needs a 5-colour set");
  }
  const KappaTable table(g);
  Lemma2Witness best;
  best.value = std::numeric_limits<long long>::max();
  for (ColourSet triple : subsets_of_size(colours, 3)) {
    const auto t = static_cast<long long>(table(triple));
    for (ColourSet pair : subsets_of_size(triple, 2)) {
      const auto value = static_cast<long long>(table(pair)) - t;
      if (value < best.value) {
        const auto pc = pair.colours();
        best.value = value;
        best.i = pc[0];
        best.j = pc[1];
        best.k = triple.without(pc[0]).without(pc[1]).colours().front();
      }
    }
  }
  const auto n = static_cast<long long>(g.order());
  best.slack = make_fraction(3 * n - 20 * best.value, 20);
  best.hypothesis_holds = true;
  for (const auto& comp : residues(g, colours).components) {
    if (is_rational_homology_sphere(g, colours, comp).status != Status::Yes) {
      best.hypothesis_holds = false;
      break;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------------------------

namespace {

struct Formatter {
  std::ostringstream& out;

  void operator()(const MelonicCertificate& c) const {
    out << "melonic trace: [" << format_moves(c.trace.moves) << "]\n";
    out << "reached dipole: " << (c.trace.reached_dipole ? "true" : "false") << '\n';
  }
  void operator()(const GenusCertificate& c) const {
    out << "genus witness: (" << c.witness.colours.to_string() << ", " << c.witness.min_vertex + 1
        << ", " << c.witness.genus << ")\n";
  }
  void operator()(const BettiCertificate& c) const {
    out << "betti witness: (" << c.colours.to_string() << ", " << c.min_vertex + 1 << ", "
        << c.betti.to_string() << ")\n";
  }
  void operator()(const EulerPoincareCertificate& c) const {
    out << "euler-poincare witness: (" << c.colours.to_string() << ", " << c.alternating_sum
        << " != " << c.twice_components << ")\n";
  }
  void operator()(const ResidueSpheresCertificate& c) const {
    out << "residue spheres: all residues with |I| <= " << c.max_size << '\n';
    for (const auto& e : c.entries) {
      if (e.colours.size() == 3) {
        out << "  genus (" << e.colours.to_string() << ", " << e.min_vertex + 1 << ", " << e.genus
            << ")\n";
      } else {
        out << "  melonic (" << e.colours.to_string() << ", " << e.min_vertex + 1 << ") ["
            << format_moves(e.moves) << "]\n";
      }
    }
  }
  void operator()(const UnknownReason& c) const { out << "unknown: " << c.reason << '\n'; }
};

struct Checker {
  const ColourfulGraph& g;
  Status status;

  bool operator()(const MelonicCertificate& c) const {
    return status == Status::Yes && c.trace.reached_dipole && g.is_connected() &&
           replay_trace(g, c.trace);
  }

  bool operator()(const GenusCertificate& c) const {
    const auto& w = c.witness;
    if (w.colours.size() != 3 || !w.colours.within(g.colour_count()) || w.min_vertex >= g.order()) {
      return false;
    }
    const auto part = residues(g, w.colours);
    const auto& comp = component_containing(part, w.min_vertex);
    if (comp.front() != w.min_vertex) return false;
    if (genus_of_residue(g, w.colours, comp).genus != w.genus) return false;
    if (status == Status::No) return w.genus > 0;
    // A Yes from a genus certificate is only meaningful for a connected d=2 graph.
    return status == Status::Yes && w.genus == 0 && g.dim() == 2 && part.count() == 1;
  }

  bool operator()(const BettiCertificate& c) const {
    if (c.colours.empty() || !c.colours.within(g.colour_count()) || c.min_vertex >= g.order()) {
      return false;
    }
    const auto part = residues(g, c.colours);
    const auto& comp = component_containing(part, c.min_vertex);
    if (comp.front() != c.min_vertex) return false;
    const auto again = is_rational_homology_sphere(g, c.colours, comp);
    const auto* recomputed = std::get_if<BettiCertificate>(&again.certificate);
    if (recomputed == nullptr || !(recomputed->betti == c.betti)) return false;
    if (status == Status::No) return !c.betti.is_sphere(c.colours.size() - 1);
    return status == Status::Yes && c.betti.is_sphere(c.colours.size() - 1) &&
           c.colours == g.all_colours();
  }

  bool operator()(const EulerPoincareCertificate& c) const {
    if ((c.colours.size() - 1) % 2 != 0 || !c.colours.within(g.colour_count())) return false;
    return status == Status::No && !euler_poincare_check(g, c.colours);
  }

  bool operator()(const ResidueSpheresCertificate& c) const {
    if (status != Status::Yes || c.max_size != g.dim()) return false;
    std::size_t expected = 0;
    for (int size = 3; size <= c.max_size; ++size) {
      for (ColourSet colours : subsets_of_size(g.all_colours(), size)) {
        expected += residues(g, colours).count();
      }
    }
    if (c.entries.size() != expected) return false;
    for (const auto& e : c.entries) {
      if (e.colours.size() < 3 || e.colours.size() > c.max_size) return false;
      const auto part = residues(g, e.colours);
      const auto& comp = component_containing(part, e.min_vertex);
      if (comp.front() != e.min_vertex) return false;
      if (e.colours.size() == 3) {
        if (e.genus != 0 || genus_of_residue(g, e.colours, comp).genus != 0) return false;
      } else {
        const auto residue = g.restrict_to(e.colours, comp);
        ColourfulGraph current = residue;
        try {
          for (const auto& move : e.moves) current = remove_dipole(current, move);
        } catch (const InvalidMove&) {
          return false;
        }
        if (current.half() != 1) return false;
      }
    }
    // Entries must be distinct residues.
    std::vector<std::pair<std::uint32_t, Vertex>> keys;
    for (const auto& e : c.entries) keys.emplace_back(e.colours.bits(), e.min_vertex);
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

  bool operator()(const UnknownReason&) const { return status == Status::Unknown; }
};

}  // namespace

std::string format_certificate(const Certificate& certificate) {
  std::ostringstream out;
  std::visit(Formatter{out}, certificate);
  return out.str();
}

bool check_certificate(const ColourfulGraph& g, const TopologyVerdict& verdict) {
  return std::visit(Checker{g, verdict.status}, verdict.certificate);
}

}  // namespace coltri
