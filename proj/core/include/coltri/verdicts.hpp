#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coltri/dipoles.hpp"
#include "coltri/homology.hpp"
#include "coltri/residues.hpp"

namespace coltri {

enum class Status { Yes, No, Unknown };

std::string to_string(Status s);

/// Melonic reduction ending at the 2-vertex dipole (proves a sphere).
struct MelonicCertificate {
  ReductionTrace trace;
};

/// Genus of one 3-residue. genus 0 for d=2 certifies a sphere; positive genus refutes.
struct GenusCertificate {
  GenusWitness witness;
};

/// Betti vector of X(G_I) restricted to one residue (the whole graph when I = all colours).
struct BettiCertificate {
  ColourSet colours;
  Vertex min_vertex = 0;
  BettiVector betti;
};

/// Euler-Poincare identity failing for an even-dimensional X(G_I).
struct EulerPoincareCertificate {
  ColourSet colours;
  long long alternating_sum = 0;
  long long twice_components = 0;
};

/// Every residue G_I, 1 <= |I| <= limit, certified a sphere: |I| <= 2 trivially, |I| = 3 by
/// genus 0, |I| >= 4 by a melonic trace on the restricted graph.
struct ResidueSpheresCertificate {
  struct Entry {
    ColourSet colours;
    Vertex min_vertex = 0;
    std::size_t genus = 0;          // |I| = 3
    std::vector<DipoleMove> moves;  // |I| >= 4
  };
  int max_size = 0;
  std::vector<Entry> entries;
};

/// Why a semi-decision gave up.
struct UnknownReason {
  std::string reason;
};

using Certificate = std::variant<MelonicCertificate, GenusCertificate, BettiCertificate,
                                 EulerPoincareCertificate, ResidueSpheresCertificate,
                                 UnknownReason>;

/// Three-valued classification. Yes and No always carry a checkable certificate.
struct TopologyVerdict {
  Status status = Status::Unknown;
  Certificate certificate = UnknownReason{};
  /// Short human summary ("d=3 exact", "melonic", ...).
  std::string method;
};

/// Structured text form of the certificate (traces as (w,b,free_colour), genus witness as
/// (I, min-vertex, genus), Betti as the vector). Vertex ids are printed 1-based.
std::string format_certificate(const Certificate& certificate);

/// Re-derives the certificate's claim on `g` independently of how it was produced.
bool check_certificate(const ColourfulGraph& g, const TopologyVerdict& verdict);

/// Options shared by the verdict procedures.
struct VerdictOptions {
  /// States explored by the backtracking melonic search when greedy reduction fails;
  /// 0 disables it.
  std::size_t search_states = 64;
  /// Skip the homology fallback for graphs with more vertices than this.
  std::size_t homology_vertex_limit = 4096;
};

/// d=1 always Yes; d=2 exact by genus; d>=3 Yes via melonic reduction, No via a positive-genus
/// 3-residue or a non-sphere Betti vector, otherwise Unknown. Throws Disconnected.
TopologyVerdict is_sphere(const ColourfulGraph& g, const VerdictOptions& options = {});

/// d<=2 always Yes; d=3 exact (all 3-residues planar); d>=4 Yes when every proper residue is
/// certified a sphere, No when some residue is not a rational homology sphere, else Unknown.
TopologyVerdict is_manifold(const ColourfulGraph& g, const VerdictOptions& options = {});

/// Exact: Betti vector of the residue equals that of the (|I|-1)-sphere. |I| = 1 residues
/// (single edges) are the 0-sphere by convention.
TopologyVerdict is_rational_homology_sphere(const ColourfulGraph& g, ColourSet colours,
                                            std::span<const Vertex> component);

/// Sum_{r=0}^{|I|-1} (-1)^r kappa^(r)_I == 2 kappa_I. Throws OddDimension unless |I|-1 is even.
bool euler_poincare_check(const ColourfulGraph& g, ColourSet colours);

/// Exact fraction num/den with den > 0.
struct Fraction {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool negative() const { return num < 0; }
  std::string to_string() const;
};

/// Minimum over pairs {i,j} in I of kappa_{i,j} - kappa_I, compared with n/6.
struct Lemma1Witness {
  int i = 0;
  int j = 0;
  long long value = 0;
  Fraction slack;  // n/6 - value
  bool hypothesis_holds = false;
};

/// Minimum over distinct i,j,k in I of kappa_{i,j} - kappa_{i,j,k}, compared with 3n/20.
struct Lemma2Witness {
  int i = 0;
  int j = 0;
  int k = 0;
  long long value = 0;
  Fraction slack;  // 3n/20 - value
  bool hypothesis_holds = false;
};

/// Requires |I| = 3 (InvalidColourSet otherwise). The hypothesis is: all components of G_I
/// have genus 0. Outside it the raw minimum is still returned, flagged.
Lemma1Witness lemma1_witness(const ColourfulGraph& g, ColourSet colours);

/// Requires |I| = 5. The hypothesis is: every component of G_I is a rational homology
/// 4-sphere.
Lemma2Witness lemma2_witness(const ColourfulGraph& g, ColourSet colours);

}  // namespace coltri
