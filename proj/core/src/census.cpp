#include "coltri/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "coltri/constructions.hpp"

namespace coltri {

std::string class_name(CensusClass c) {
  switch (c) {
    case CensusClass::All: return "all";
    case CensusClass::PropertyP: return "propertyP";
    case CensusClass::Manifold: return "manifold";
    case CensusClass::ManifoldUnknown: return "manifold_unknown";
    case CensusClass::SphereYes: return "sphere_yes";
    case CensusClass::SphereUnknown: return "sphere_unknown";
    case CensusClass::Melonic: return "melonic";
    case CensusClass::RationalSpheres: return "rational_spheres";
    case CensusClass::ManifoldRhs: return "manifold_rhs";
  }
  return "?";
}

std::array<CensusClass, kCensusClassCount> all_census_classes() {
  std::array<CensusClass, kCensusClassCount> out{};
  for (std::size_t i = 0; i < kCensusClassCount; ++i) out[i] = static_cast<CensusClass>(i);
  return out;
}

namespace {

void mark(GraphClassification& c, CensusClass cls, bool value = true) {
  c.member[static_cast<std::size_t>(cls)] = value;
}

bool residues_are_rational_spheres(const ColourfulGraph& g, ColourSet colours) {
  if (colours.size() == 3) {
    for (const auto& r : embedded_residues(g, colours)) {
      if (r.genus != 0) return false;
    }
    return true;
  }
  for (const auto& comp : residues(g, colours).components) {
    if (is_rational_homology_sphere(g, colours, comp).status != Status::Yes) return false;
  }
  return true;
}

}  // namespace

GraphClassification classify(const ColourfulGraph& g, const VerdictOptions& options) {
  GraphClassification out;
  mark(out, CensusClass::All);
  out.components = kappa(g, g.all_colours());
  const bool connected = out.components == 1;

  const bool planar = has_property_P(g);
  mark(out, CensusClass::PropertyP, planar);

  const auto manifold = is_manifold(g, options);
  mark(out, CensusClass::Manifold, manifold.status == Status::Yes);
  mark(out, CensusClass::ManifoldUnknown, manifold.status == Status::Unknown);

  bool rational_sphere = false;
  if (connected) {
    mark(out, CensusClass::Melonic, melonic_reduce(g).reached_dipole);
    const auto sphere = is_sphere(g, options);
    mark(out, CensusClass::SphereYes, sphere.status == Status::Yes);
    mark(out, CensusClass::SphereUnknown, sphere.status == Status::Unknown);
    if (sphere.status == Status::Yes) {
      rational_sphere = true;
    } else if (manifold.status == Status::Yes) {
      rational_sphere = betti_numbers(g, g.all_colours()).is_sphere(g.dim());
    }
  }
  mark(out, CensusClass::ManifoldRhs, manifold.status == Status::Yes && rational_sphere);

  bool n_class = true;
  const ColourSet first_d = ColourSet::all(g.dim());
  for (int size : {3, 5}) {
    if (size > g.dim() || !n_class) continue;
    for (ColourSet colours : subsets_of_size(first_d, size)) {
      if (!residues_are_rational_spheres(g, colours)) {
        n_class = false;
        break;
      }
    }
  }
  mark(out, CensusClass::RationalSpheres, n_class);
  return out;
}

// ---------------------------------------------------------------------------------------------

mpz_class tuple_count(int d, std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n / 2);
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(d + 1));
  return out;
}

mpz_class labelled_from_components(std::size_t n, const std::vector<mpz_class>& by_components) {
  if (by_components.empty()) return 0;
  const std::size_t top = by_components.size() - 1;
  mpz_class numerator = 0;
  for (std::size_t c = 0; c <= top; ++c) {
    mpz_class scaled = by_components[c];
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), top - c);
    numerator += scaled;
  }
  mpz_class choose;
  mpz_bin_uiui(choose.get_mpz_t(), n, n / 2);
  numerator *= choose;
  mpz_class denominator = 1;
  mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(), top);
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw Error("labelled count is not an integer; component bookkeeping is inconsistent");
  }
  mpz_divexact(numerator.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return numerator;
}

namespace {

std::vector<Permutation> all_permutations(std::size_t size) {
  std::vector<Permutation> out;
  Permutation p(size);
  std::iota(p.begin(), p.end(), 0u);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_census_params(int d, std::size_t n, double budget) {
  if (d < 1) throw BadParams("d must be at least 1");
  if (n == 0 || n % 2 != 0) throw OddN("n must be even and positive");
  if (n / 2 > 12) throw BudgetExceeded("n/2 too large for exhaustive enumeration");
  const mpz_class tuples = tuple_count(d, n);
  if (tuples.get_d() > budget) {
    throw BudgetExceeded("(n/2)!^(d+1) = " + tuples.get_str() + " tuples exceeds budget");
  }
}

// Runs visit(acc, graph) on every representative of a shard (colour 2 fixed to one
// permutation) and returns the per-shard accumulators in shard order.
template <class Acc, class Visit>
std::vector<Acc> run_sharded(int d, std::size_t n, unsigned threads, Visit visit) {
  const auto perms = all_permutations(n / 2);
  const std::size_t shards = perms.size();
  std::vector<Acc> results(shards);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&]() {
    try {
      while (true) {
        const std::size_t shard = next.fetch_add(1);
        if (shard >= shards) return;
        Acc& acc = results[shard];
        // odometer over colours 3..d+1
        const std::size_t free_colours = static_cast<std::size_t>(d - 1);
        std::vector<std::size_t> digits(free_colours, 0);
        std::vector<Permutation> matchings(static_cast<std::size_t>(d + 1));
        matchings[0] = perms.front();  // identity
        matchings[1] = perms[shard];
        while (true) {
          for (std::size_t i = 0; i < free_colours; ++i) matchings[i + 2] = perms[digits[i]];
          visit(acc, ColourfulGraph::from_matchings(d, matchings));
          std::size_t pos = 0;
          while (pos < free_colours && ++digits[pos] == perms.size()) digits[pos++] = 0;
          if (pos == free_colours) break;
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(shards);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, shards));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

struct CensusShard {
  std::uint64_t representatives = 0;
  // counts[class][components]
  std::array<std::vector<std::uint64_t>, kCensusClassCount> counts;
  std::vector<std::pair<ColourfulGraph, GraphClassification>> graphs;
};

}  // namespace

CensusReport enumerate(int d, std::size_t n, const CensusOptions& options) {
  check_census_params(d, n, options.budget);
  const bool keep_graphs = static_cast<bool>(options.on_graph);
  auto shards = run_sharded<CensusShard>(
      d, n, options.threads, [&](CensusShard& acc, ColourfulGraph g) {
        const auto cls = classify(g, options.verdict);
        ++acc.representatives;
        for (std::size_t i = 0; i < kCensusClassCount; ++i) {
          if (!cls.member[i]) continue;
          auto& bucket = acc.counts[i];
          if (bucket.size() <= cls.components) bucket.resize(cls.components + 1, 0);
          ++bucket[cls.components];
        }
        if (keep_graphs) acc.graphs.emplace_back(std::move(g), cls);
      });

  CensusReport report;
  report.d = d;
  report.n = n;
  mpz_class scale;
  mpz_fac_ui(scale.get_mpz_t(), n / 2);
  for (std::size_t i = 0; i < kCensusClassCount; ++i) {
    std::vector<mpz_class> by_components;
    for (const auto& shard : shards) {
      const auto& bucket = shard.counts[i];
      if (by_components.size() < bucket.size()) by_components.resize(bucket.size(), 0);
      for (std::size_t c = 0; c < bucket.size(); ++c) {
        by_components[c] += mpz_class(static_cast<unsigned long>(bucket[c]));
      }
    }
    mpz_class total = 0;
    for (auto& value : by_components) {
      value *= scale;
      total += value;
    }
    report.counts[i].canonical = total;
    report.counts[i].labelled = labelled_from_components(n, by_components);
  }
  for (const auto& shard : shards) report.representatives += shard.representatives;
  if (keep_graphs) {
    for (const auto& shard : shards) {
      for (const auto& [g, cls] : shard.graphs) options.on_graph(g, cls);
    }
  }
  return report;
}

void for_each_representative(int d, std::size_t n,
                             const std::function<void(const ColourfulGraph&)>& visit) {
  if (n == 0 || n % 2 != 0) throw OddN("n must be even and positive");
  run_sharded<int>(d, n, 1, [&](int&, const ColourfulGraph& g) { visit(g); });
}

void write_census_rows(std::ostream& out, const CensusReport& report) {
  for (auto c : all_census_classes()) out << class_name(c) << ',' << report[c].labelled << '\n';
  for (auto c : all_census_classes()) {
    out << "canonical." << class_name(c) << ',' << report[c].canonical << '\n';
  }
}

void write_census_table(std::ostream& out, const CensusReport& report) {
  out << "census d=" << report.d << " n=" << report.n
      << " (representatives classified: " << report.representatives << ")\n";
  out << "  class              labelled          canonical\n";
  for (auto c : all_census_classes()) {
    std::string name = class_name(c);
    std::string labelled = report[c].labelled.get_str();
    name.resize(std::max<std::size_t>(name.size(), 18), ' ');
    labelled.resize(std::max<std::size_t>(labelled.size(), 17), ' ');
    out << "  " << name << ' ' << labelled << ' ' << report[c].canonical << '\n';
  }
}

// ---------------------------------------------------------------------------------------------

namespace {

bool less_than(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }

struct LemmaShard {
  LemmaBoundReport partial;
};

void merge_min(std::optional<Fraction>& best, std::optional<ColourfulGraph>& best_graph,
               ColourSet& best_colours, const std::optional<Fraction>& candidate,
               const std::optional<ColourfulGraph>& graph, ColourSet colours) {
  if (!candidate) return;
  if (!best || less_than(*candidate, *best)) {
    best = candidate;
    best_graph = graph;
    best_colours = colours;
  }
}

}  // namespace

LemmaBoundReport verify_lemma_bounds(int d, std::size_t n, const CensusOptions& options) {
  check_census_params(d, n, options.budget);
  const auto half_n = static_cast<long long>(n) / 2;
  auto shards = run_sharded<LemmaShard>(
      d, n, options.threads, [&](LemmaShard& acc, const ColourfulGraph& g) {
        auto& r = acc.partial;
        ++r.graphs;
        if (g.colour_count() >= 3) {
          for (ColourSet colours : subsets_of_size(g.all_colours(), 3)) {
            const auto w = lemma1_witness(g, colours);
            if (!w.hypothesis_holds) continue;
            ++r.lemma1_checked;
            if (w.slack.negative()) ++r.lemma1_violations;
            merge_min(r.lemma1_min_slack, r.lemma1_extremal, r.lemma1_extremal_colours, w.slack, g,
                      colours);
            ++r.euler_poincare_checked;
            const auto k2 = static_cast<long long>(kappa_r(g, colours, 2));
            const auto k3 = static_cast<long long>(kappa(g, colours));
            if (k2 != 2 * k3 + half_n) ++r.euler_poincare_violations;
          }
        }
        if (g.colour_count() >= 5) {
          for (ColourSet colours : subsets_of_size(g.all_colours(), 5)) {
            const auto w = lemma2_witness(g, colours);
            if (!w.hypothesis_holds) continue;
            ++r.lemma2_checked;
            if (w.slack.negative()) ++r.lemma2_violations;
            merge_min(r.lemma2_min_slack, r.lemma2_extremal, r.lemma2_extremal_colours, w.slack, g,
                      colours);
          }
        }
      });

  LemmaBoundReport report;
  report.d = d;
  report.n = n;
  for (const auto& shard : shards) {
    const auto& p = shard.partial;
    report.graphs += p.graphs;
    report.lemma1_checked += p.lemma1_checked;
    report.lemma1_violations += p.lemma1_violations;
    report.euler_poincare_checked += p.euler_poincare_checked;
    report.euler_poincare_violations += p.euler_poincare_violations;
    report.lemma2_checked += p.lemma2_checked;
    report.lemma2_violations += p.lemma2_violations;
    merge_min(report.lemma1_min_slack, report.lemma1_extremal, report.lemma1_extremal_colours,
              p.lemma1_min_slack, p.lemma1_extremal, p.lemma1_extremal_colours);
    merge_min(report.lemma2_min_slack, report.lemma2_extremal, report.lemma2_extremal_colours,
              p.lemma2_min_slack, p.lemma2_extremal, p.lemma2_extremal_colours);
  }
  return report;
}

// ---------------------------------------------------------------------------------------------

bool ExtensionBoundReport::ok() const {
  return std::all_of(buckets.begin(), buckets.end(),
                     [](const ExtensionBucket& b) { return b.within_bound(); });
}

namespace {

void perfect_matchings(std::vector<int>& partner, std::vector<ColourfulGraph::Edge>& current,
                       const std::function<void(const std::vector<ColourfulGraph::Edge>&)>& emit) {
  const auto it = std::find(partner.begin(), partner.end(), -1);
  if (it == partner.end()) {
    emit(current);
    return;
  }
  const auto u = static_cast<Vertex>(it - partner.begin());
  for (Vertex v = u + 1; v < partner.size(); ++v) {
    if (partner[v] != -1) continue;
    partner[u] = static_cast<int>(v);
    partner[v] = static_cast<int>(u);
    current.push_back({u, v, 3});
    perfect_matchings(partner, current, emit);
    current.pop_back();
    partner[u] = -1;
    partner[v] = -1;
  }
}

}  // namespace

ExtensionBoundReport verify_extension_bound(const ColourfulGraph& c, std::size_t max_n) {
  if (c.dim() != 1) throw BadParams("extension bound needs a 2-coloured graph (d=1)");
  const std::size_t n = c.order();
  if (n > max_n) {
    throw BudgetExceeded("n=" + std::to_string(n) + " exceeds the extension bound limit " +
                         std::to_string(max_n));
  }
  ExtensionBoundReport report;
  report.n = n;
  report.cycles = bicoloured_cycles(c, 1, 2);

  const auto base = c.edges();
  std::vector<std::uint64_t> per_k(report.cycles + 1, 0);
  std::vector<int> partner(n, -1);
  std::vector<ColourfulGraph::Edge> extra;
  perfect_matchings(partner, extra, [&](const std::vector<ColourfulGraph::Edge>& matching) {
    ++report.matchings_tried;
    std::vector<ColourfulGraph::Edge> edges = base;
    edges.insert(edges.end(), matching.begin(), matching.end());
    std::optional<ColourfulGraph> g;
    try {
      g = ColourfulGraph::from_edge_list(2, n, edges);
    } catch (const NotBipartite&) {
      ++report.non_bipartite;
      return;
    }
    if (!has_property_P(*g)) {
      ++report.non_planar;
      return;
    }
    ++per_k.at(kappa(*g, g->all_colours()));
  });

  for (std::size_t k = 1; k < per_k.size(); ++k) {
    if (per_k[k] == 0) continue;
    ExtensionBucket bucket;
    bucket.components = k;
    bucket.count = per_k[k];
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 5 * n);
    mpz_class n_pow;
    mpz_ui_pow_ui(n_pow.get_mpz_t(), n, report.cycles - k);
    bucket.bound = two_pow * n_pow;
    report.buckets.push_back(std::move(bucket));
  }
  return report;
}

// ---------------------------------------------------------------------------------------------

double harmonic(std::size_t k) {
  double h = 0;
  for (std::size_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

std::size_t complex_vertex_count(const ColourfulGraph& g) {
  std::size_t total = 0;
  for (ColourSet colours : subsets_of_size(g.all_colours(), g.dim())) total += kappa(g, colours);
  return total;
}

StatsReport vn_experiment(int d, const std::vector<std::size_t>& ks, std::size_t samples,
                          std::uint64_t seed) {
  if (d < 3) throw BadParams("the manifold family needs d >= 3");
  if (samples == 0) throw BadParams("need at least one sample");
  StatsReport report;
  report.d = d;
  report.seed = seed;
  for (std::size_t k : ks) {
    if (k == 0) throw BadParams("k must be positive");
    Rng rng(seed + k * 0x9E3779B97F4A7C15ull);
    VnRow row;
    row.k = k;
    row.n = 4 * k * static_cast<std::size_t>(d);
    row.samples = samples;
    std::vector<std::size_t> vertices;
    vertices.reserve(samples);
    double cycles_sum = 0;
    bool offset_stable = true;
    std::optional<long long> offset;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto params = random_params(d, k, rng);
      const auto construction = build_manifold(params);
      const auto v = complex_vertex_count(construction.graph);
      const auto cycles = cycles_of_sigma_tau_inverse(params.sigma, params.tau);
      vertices.push_back(v);
      cycles_sum += static_cast<double>(cycles);
      const long long this_offset =
          static_cast<long long>(v) - static_cast<long long>(d) * static_cast<long long>(cycles);
      if (!offset) offset = this_offset;
      if (*offset != this_offset) offset_stable = false;
    }
    double uniform_sum = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto sigma = random_permutation(k, rng);
      const auto tau = random_permutation(k, rng);
      uniform_sum += static_cast<double>(cycles_of_sigma_tau_inverse(sigma, tau));
    }
    std::sort(vertices.begin(), vertices.end());
    row.min_vertices = vertices.front();
    row.max_vertices = vertices.back();
    row.median_vertices = vertices[vertices.size() / 2];
    row.mean_vertices =
        static_cast<double>(std::accumulate(vertices.begin(), vertices.end(), std::size_t{0})) /
        static_cast<double>(samples);
    row.vertices_per_n = row.mean_vertices / static_cast<double>(row.n);
    row.n_over_log_n = static_cast<double>(row.n) / std::log(static_cast<double>(row.n));
    row.mean_cycles = cycles_sum / static_cast<double>(samples);
    // sigma tau^-1 is uniform on S_k (even d) or on S_{odds} x S_{evens} (odd d).
    row.expected_cycles = d % 2 == 0 ? harmonic(k) : harmonic((k + 1) / 2) + harmonic(k / 2);
    if (offset_stable) row.vertex_offset = offset;
    row.mean_uniform_cycles = uniform_sum / static_cast<double>(samples);
    row.harmonic_k = harmonic(k);
    report.rows.push_back(row);
  }
  return report;
}

void write_stats_rows(std::ostream& out, const StatsReport& report) {
  out << "k,n,samples,mean_V,min_V,median_V,max_V,V_per_n,n_over_log_n,mean_cycles,"
         "expected_cycles,vertex_offset,mean_uniform_cycles,H_k\n";
  for (const auto& r : report.rows) {
    out << r.k << ',' << r.n << ',' << r.samples << ',' << r.mean_vertices << ','
        << r.min_vertices << ',' << r.median_vertices << ',' << r.max_vertices << ','
        << r.vertices_per_n << ',' << r.n_over_log_n << ',' << r.mean_cycles << ','
        << r.expected_cycles << ',';
    if (r.vertex_offset) {
      out << *r.vertex_offset;
    } else {
      out << "varies";
    }
    out << ',' << r.mean_uniform_cycles << ',' << r.harmonic_k << '\n';
  }
}

}  // namespace coltri
