// coltri: command-line front end for coloured triangulations.
//
// Exit codes: 0 yes/ok, 1 no, 2 unknown, 64 usage, 65 bad input data, 66 cannot open a file.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "coltri/census.hpp"
#include "coltri/cgf.hpp"
#include "coltri/constructions.hpp"
#include "coltri/dipoles.hpp"
#include "coltri/homology.hpp"
#include "coltri/random.hpp"
#include "coltri/residues.hpp"
#include "coltri/verdicts.hpp"

namespace fs = std::filesystem;
using namespace coltri;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(Status s) {
  switch (s) {
    case Status::Yes: return kExitYes;
    case Status::No: return kExitNo;
    case Status::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

ColourfulGraph load(const std::string& path) {
  if (path == "-") return parse_cgf(std::cin);
  return read_cgf_file(path);
}

// "1,2,4", "{1,2,4}" or "1 2 4".
ColourSet parse_colours(const std::string& text, const ColourfulGraph& g) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '{' || ch == '}' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::vector<int> colours;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int c = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      colours.push_back(c);
    } catch (const std::logic_error&) {
      throw UsageError("bad colour '" + token + "' in --colours");
    }
  }
  if (colours.empty()) throw UsageError("--colours needs at least one colour");
  for (int c : colours) {
    if (c < 1 || c > g.colour_count()) {
      throw UsageError("colour " + std::to_string(c) + " outside 1.." +
                       std::to_string(g.colour_count()));
    }
  }
  return ColourSet::of(colours);
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

std::vector<ColourSet> subsets_by_size(ColourSet universe) {
  std::vector<ColourSet> out;
  for (int size = 1; size <= universe.size(); ++size) {
    for (ColourSet s : subsets_of_size(universe, size)) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------------------------

int cmd_validate(const std::string& file) {
  const auto g = load(file);
  const auto components = kappa(g, g.all_colours());
  std::cout << "valid: d=" << g.dim() << " n=" << g.order() << '\n';
  std::cout << "connected: " << (components == 1 ? "yes" : "no") << " (" << components
            << " component" << (components == 1 ? "" : "s") << ")\n";
  return kExitYes;
}

int cmd_residues(const std::string& file, const std::string& colours_text) {
  const auto g = load(file);
  const auto colours = parse_colours(colours_text, g);
  const auto part = residues(g, colours);
  std::cout << "kappa_" << colours.to_string() << " = " << part.count() << '\n';
  for (std::size_t i = 0; i < part.components.size(); ++i) {
    std::cout << "component " << i + 1 << ": " << vertex_list(part.components[i]) << '\n';
  }
  return kExitYes;
}

int cmd_kappa(const std::string& file) {
  const auto g = load(file);
  const KappaTable table(g);
  std::cout << "colours,kappa\n";
  for (ColourSet s : subsets_by_size(g.all_colours())) {
    std::cout << '"' << s.to_string() << "\"," << table(s) << '\n';
  }
  return kExitYes;
}

int cmd_genus(const std::string& file) {
  const auto g = load(file);
  if (g.colour_count() < 3) throw UsageError("genus needs at least 3 colours (d >= 2)");
  bool planar = true;
  for (ColourSet triple : subsets_of_size(g.all_colours(), 3)) {
    for (const auto& r : embedded_residues(g, triple)) {
      std::cout << triple.to_string() << " min-vertex " << r.component.front() + 1
                << ": genus " << r.genus << " (V=" << r.vertices << " E=" << r.edges
                << " F=" << r.faces << ")\n";
      planar = planar && r.genus == 0;
    }
  }
  std::cout << "property P: " << (planar ? "yes" : "no") << '\n';
  return kExitYes;
}

int cmd_verdict(const std::string& file, bool sphere, bool certificate) {
  const auto g = load(file);
  const char* label = sphere ? "sphere" : "manifold";
  if (sphere && !g.is_connected()) {
    std::cout << label << ": no (disconnected, " << kappa(g, g.all_colours())
              << " components)\n";
    return kExitNo;
  }
  const auto verdict = sphere ? is_sphere(g) : is_manifold(g);
  std::cout << label << ": " << to_string(verdict.status) << " (" << verdict.method << ")\n";
  if (certificate) std::cout << format_certificate(verdict.certificate);
  return exit_code(verdict.status);
}

int cmd_betti(const std::string& file, const std::string& colours_text) {
  const auto g = load(file);
  if (colours_text.empty()) {
    const auto b = betti_numbers(g, g.all_colours());
    std::cout << "betti " << g.all_colours().to_string() << ": " << b.to_string() << '\n';
    return kExitYes;
  }
  const auto colours = parse_colours(colours_text, g);
  for (const auto& comp : residues(g, colours).components) {
    const auto verdict = is_rational_homology_sphere(g, colours, comp);
    const auto& cert = std::get<BettiCertificate>(verdict.certificate);
    std::cout << "betti " << colours.to_string() << " min-vertex " << comp.front() + 1 << ": "
              << cert.betti.to_string() << " rational sphere: " << to_string(verdict.status)
              << '\n';
  }
  return kExitYes;
}

int cmd_reduce(const std::string& file, bool search) {
  const auto g = load(file);
  auto trace = melonic_reduce(g);
  if (!trace.reached_dipole && search) {
    if (auto found = melonic_search(g)) trace = std::move(*found);
  }
  std::cout << "trace: [" << format_moves(trace.moves) << "]\n";
  std::cout << "terminal: n=" << trace.terminal.order() << '\n';
  std::cout << "reached dipole: " << (trace.reached_dipole ? "true" : "false") << '\n';
  return kExitYes;
}

struct GenOptions {
  int d = 3;
  std::size_t k = 1;
  std::string sigma;
  std::string tau;
  bool random_perms = false;
  std::uint64_t seed = 0;
  int planar_extend = 0;
};

int cmd_gen(const GenOptions& o) {
  ConstructionParams params;
  if (o.random_perms) {
    if (!o.sigma.empty() || !o.tau.empty()) {
      throw UsageError("--random-perms excludes --sigma/--tau");
    }
    Rng rng(o.seed);
    params = random_params(o.d, o.k, rng);
  } else {
    if (o.sigma.empty() || o.tau.empty()) {
      throw UsageError("gen needs --sigma and --tau, or --random-perms");
    }
    params = {o.d, o.k, parse_permutation(o.sigma), parse_permutation(o.tau)};
  }
  const auto construction = build_manifold(params);
  std::ostringstream header;
  header << "# G(sigma,tau) d=" << params.d << " k=" << params.k
         << " sigma=" << format_permutation(params.sigma)
         << " tau=" << format_permutation(params.tau);
  if (o.planar_extend != 0) {
    if (o.d != 3) throw UsageError("--planar-extend needs --d 3");
    if (o.planar_extend < 4) throw UsageError("--planar-extend must be at least 4");
    std::cout << header.str() << " extended to d=" << o.planar_extend << '\n';
    write_cgf(std::cout, build_planar_family(construction, o.planar_extend));
    return kExitYes;
  }
  std::cout << header.str() << '\n';
  write_cgf(std::cout, construction.graph);
  return kExitYes;
}

int cmd_random(int d, std::size_t n, std::uint64_t seed) {
  std::cout << "# random d=" << d << " n=" << n << " seed=" << seed << '\n';
  write_cgf(std::cout, random_graph(d, n, seed));
  return kExitYes;
}

std::string graph_label(const GraphClassification& cls) {
  for (auto c : {CensusClass::SphereYes, CensusClass::SphereUnknown, CensusClass::ManifoldRhs,
                 CensusClass::Manifold, CensusClass::ManifoldUnknown, CensusClass::PropertyP}) {
    if (cls.in(c)) return class_name(c);
  }
  return class_name(CensusClass::All);
}

struct CensusCli {
  int d = 3;
  std::size_t n = 4;
  std::string emit_dir;
  double budget = 1e8;
  unsigned threads = 0;
  bool rows = false;
};

int cmd_census(const CensusCli& o) {
  CensusOptions options;
  options.budget = o.budget;
  options.threads = o.threads;
  std::map<std::string, std::size_t> emitted;
  if (!o.emit_dir.empty()) {
    fs::create_directories(o.emit_dir);
    options.on_graph = [&](const ColourfulGraph& g, const GraphClassification& cls) {
      const auto label = graph_label(cls);
      std::ostringstream name;
      name << label << '_' << std::setw(6) << std::setfill('0') << emitted[label]++ << ".cgf";
      std::ofstream out(fs::path(o.emit_dir) / name.str());
      if (!out) throw IoError("cannot write " + name.str());
      write_cgf(out, g);
    };
  }
  std::cerr << "enumerating " << tuple_count(o.d, o.n) << " matching tuples ("
            << "(n/2)!^(d+1))\n";
  const auto report = enumerate(o.d, o.n, options);
  if (o.rows) {
    write_census_rows(std::cout, report);
  } else {
    write_census_table(std::cout, report);
  }
  return kExitYes;
}

int cmd_verify_lemmas(int d, std::size_t n, double budget, unsigned threads) {
  CensusOptions options;
  options.budget = budget;
  options.threads = threads;
  const auto r = verify_lemma_bounds(d, n, options);
  std::cout << "graphs: " << r.graphs << '\n';
  std::cout << "pair gap (kappa_ij - kappa_I <= n/6): checked " << r.lemma1_checked
            << ", violations " << r.lemma1_violations;
  if (r.lemma1_min_slack) std::cout << ", min slack " << r.lemma1_min_slack->to_string();
  std::cout << '\n';
  std::cout << "euler-poincare (kappa2_I = 2 kappa_I + n/2): checked " << r.euler_poincare_checked
            << ", violations " << r.euler_poincare_violations << '\n';
  std::cout << "triple gap (kappa_ij - kappa_ijk <= 3n/20): checked " << r.lemma2_checked
            << ", violations " << r.lemma2_violations;
  if (r.lemma2_min_slack) std::cout << ", min slack " << r.lemma2_min_slack->to_string();
  std::cout << '\n';
  if (r.lemma1_extremal) {
    std::cout << "# pair-gap extremal graph, colours " << r.lemma1_extremal_colours.to_string()
              << '\n';
    write_cgf(std::cout, *r.lemma1_extremal);
  }
  return r.ok() ? kExitYes : kExitNo;
}

int cmd_bound_check(const std::string& file, std::size_t max_n) {
  const auto c = load(file);
  const auto r = verify_extension_bound(c, max_n);
  std::cout << "n=" << r.n << " c=" << r.cycles << " matchings=" << r.matchings_tried
            << " non-bipartite=" << r.non_bipartite << " non-planar=" << r.non_planar << '\n';
  std::cout << "k,count,bound,ok\n";
  for (const auto& b : r.buckets) {
    std::cout << b.components << ',' << b.count << ',' << b.bound << ','
              << (b.within_bound() ? "yes" : "no") << '\n';
  }
  return r.ok() ? kExitYes : kExitNo;
}

int cmd_stats_vn(int d, std::size_t kmax, std::vector<std::size_t> ks, std::size_t samples,
                 std::uint64_t seed) {
  if (ks.empty()) {
    for (std::size_t k = 1; k < kmax; k *= 2) ks.push_back(k);
    ks.push_back(kmax);
  }
  write_stats_rows(std::cout, vn_experiment(d, ks, samples, seed));
  return kExitYes;
}

int cmd_export_dot(const std::string& file) {
  write_dot(std::cout, load(file));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coltri: coloured triangulations as colourful graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "coltri 0.1.0");

  std::string file;
  std::string colours;
  bool certificate = false;
  bool search = false;
  int handler_result = kExitYes;
  std::function<int()> action;

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", file, "CGF file, '-' for stdin")->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse a CGF file and report n, d, connectivity");
  file_arg(validate);
  validate->callback([&] { action = [&] { return cmd_validate(file); }; });

  auto* res = app.add_subcommand("residues", "List the components of G_I");
  file_arg(res);
  res->add_option("--colours", colours, "colour set I, e.g. 1,2,3")->required();
  res->callback([&] { action = [&] { return cmd_residues(file, colours); }; });

  auto* kap = app.add_subcommand("kappa", "Residue counts for every colour set");
  file_arg(kap);
  kap->callback([&] { action = [&] { return cmd_kappa(file); }; });

  auto* gen_genus = app.add_subcommand("genus", "Genus of every 3-residue");
  file_arg(gen_genus);
  gen_genus->callback([&] { action = [&] { return cmd_genus(file); }; });

  auto* cm = app.add_subcommand("check-manifold", "Manifold verdict (exit 0 yes, 1 no, 2 unknown)");
  file_arg(cm);
  cm->add_flag("--certificate", certificate, "print the certificate");
  cm->callback([&] { action = [&] { return cmd_verdict(file, false, certificate); }; });

  auto* cs = app.add_subcommand("check-sphere", "Sphere verdict (exit 0 yes, 1 no, 2 unknown)");
  file_arg(cs);
  cs->add_flag("--certificate", certificate, "print the certificate");
  cs->callback([&] { action = [&] { return cmd_verdict(file, true, certificate); }; });

  auto* betti = app.add_subcommand("betti", "Rational Betti numbers of X(G) or of each residue");
  file_arg(betti);
  betti->add_option("--colours", colours, "restrict to the residues of colour set I");
  betti->callback([&] { action = [&] { return cmd_betti(file, colours); }; });

  auto* reduce = app.add_subcommand("reduce", "Greedy melonic reduction trace");
  file_arg(reduce);
  reduce->add_flag("--search", search, "fall back to the bounded backtracking search");
  reduce->callback([&] { action = [&] { return cmd_reduce(file, search); }; });

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Emit the manifold construction G(sigma,tau) as CGF");
  gen->add_option("--d", gen_opts.d, "dimension")->required()->check(CLI::Range(3, 30));
  gen->add_option("--k", gen_opts.k, "path blocks")->required()->check(CLI::Range(1, 100000));
  gen->add_option("--sigma", gen_opts.sigma, "permutation of 1..k in image notation");
  gen->add_option("--tau", gen_opts.tau, "permutation of 1..k in image notation");
  gen->add_flag("--random-perms", gen_opts.random_perms, "draw sigma and tau at random");
  gen->add_option("--seed", gen_opts.seed, "random seed (default 0)");
  gen->add_option("--planar-extend", gen_opts.planar_extend,
                  "extend the d=3 graph to this dimension");
  gen->callback([&] { action = [&] { return cmd_gen(gen_opts); }; });

  int rd = 3;
  std::size_t rn = 2;
  std::uint64_t rseed = 0;
  auto* rnd = app.add_subcommand("random", "Emit a uniformly random colourful graph");
  rnd->add_option("--d", rd, "dimension")->required()->check(CLI::Range(1, 30));
  rnd->add_option("--n", rn, "vertex count (even)")->required();
  rnd->add_option("--seed", rseed, "random seed (default 0)");
  rnd->callback([&] { action = [&] { return cmd_random(rd, rn, rseed); }; });

  CensusCli census_opts;
  auto* census = app.add_subcommand("census", "Exhaustive census of (d+1)-colourful graphs");
  census->add_option("--d", census_opts.d, "dimension")->required()->check(CLI::Range(1, 30));
  census->add_option("--n", census_opts.n, "vertex count (even)")->required();
  census->add_option("--emit-graphs", census_opts.emit_dir, "write each representative here");
  census->add_option("--budget", census_opts.budget, "maximum matching tuples (default 1e8)");
  census->add_option("--threads", census_opts.threads, "worker threads (0 = all cores)");
  census->add_flag("--rows", census_opts.rows, "print class,count rows instead of a table");
  census->callback([&] { action = [&] { return cmd_census(census_opts); }; });

  int ld = 3;
  std::size_t ln = 4;
  double lbudget = 1e8;
  unsigned lthreads = 0;
  auto* lem = app.add_subcommand("verify-lemmas", "Check the kappa gap bounds over a census");
  lem->add_option("--d", ld, "dimension")->required()->check(CLI::Range(1, 30));
  lem->add_option("--n", ln, "vertex count (even)")->required();
  lem->add_option("--budget", lbudget, "maximum matching tuples (default 1e8)");
  lem->add_option("--threads", lthreads, "worker threads (0 = all cores)");
  lem->callback([&] { action = [&] { return cmd_verify_lemmas(ld, ln, lbudget, lthreads); }; });

  std::string cgf2;
  std::size_t max_n = 10;
  auto* bound = app.add_subcommand("bound-check", "Count planar third-colour extensions of C");
  bound->add_option("--cgf2", cgf2, "2-coloured graph C (d=1), '-' for stdin")->required();
  bound->add_option("--max-n", max_n, "refuse larger inputs (default 10)");
  bound->callback([&] { action = [&] { return cmd_bound_check(cgf2, max_n); }; });

  int sd = 3;
  std::size_t kmax = 10;
  std::vector<std::size_t> ks;
  std::size_t samples = 100;
  std::uint64_t sseed = 0;
  auto* stats = app.add_subcommand("stats-vn", "Vertex counts of X(G(sigma,tau)) against k");
  stats->add_option("--d", sd, "dimension (default 3)")->check(CLI::Range(3, 30));
  stats->add_option("--kmax", kmax, "largest k; rows at 1,2,4,...,kmax")->check(CLI::Range(1, 100000));
  stats->add_option("--ks", ks, "explicit list of k values")->delimiter(',');
  stats->add_option("--samples", samples, "samples per k (default 100)")->check(CLI::Range(1, 100000000));
  stats->add_option("--seed", sseed, "random seed (default 0)");
  stats->callback([&] { action = [&] { return cmd_stats_vn(sd, kmax, ks, samples, sseed); }; });

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a CGF file");
  file_arg(dot);
  dot->callback([&] { action = [&] { return cmd_export_dot(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    handler_result = action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitData;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoInput;
  }
  std::cout.flush();
  return handler_result;
}
