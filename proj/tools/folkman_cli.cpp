// Command-line front end: graph generation, bounds, cut search, arrowing
// decisions and certificate replay.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "folkman/arrow.hpp"
#include "folkman/bounds.hpp"
#include "folkman/io.hpp"
#include "folkman/registry.hpp"
#include "folkman/triangles.hpp"

namespace {

using namespace folkman;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;

// Errors caused by the numerics rather than the input.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

// A path to a graph file, a registry name, or a recipe such as L(17,2).
Graph load_graph(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    try {
      return parse_graph(read_file(source));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), source + ": " + e.reason());
    }
  }
  for (const auto& c : named_constructions()) {
    if (c.name == source) return lookup_named(source);
  }
  if (auto g = build_from_recipe(source)) return *g;
  throw std::invalid_argument("'" + source + "' is neither a file, a registered name, nor a recipe");
}

int default_threads() {
  if (const char* env = std::getenv("FOLKMAN_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void print_report(const BoundReport& r, std::int64_t two_t) {
  std::cout << "method: " << to_string(r.method) << "\n";
  if (r.upper) {
    std::cout << "upper: " << fmt(*r.upper) << "\n";
    std::cout << "upper-floor: " << *r.upper_floor() << "\n";
    std::cout << "certified: " << (r.certified ? "yes" : "no") << "\n";
    std::cout << "tier: " << to_string(r.tier) << "\n";
    std::cout << "sigma: " << format_double(r.sigma) << "\n";
    if (r.tier == CertTier::kNumerical) std::cout << "margin: " << format_double(r.margin) << "\n";
  } else if (r.method == BoundMethod::kEig || r.method == BoundMethod::kDual) {
    std::cout << "upper: none\n";
  }
  if (r.lower) std::cout << "lower: " << *r.lower << "\n";
  std::cout << "two-t: " << two_t << "\n";
  if (r.upper) std::cout << "below-two-t: " << (*r.upper < static_cast<double>(two_t) ? "yes" : "no") << "\n";
  std::cout << "eigen-solves: " << r.iterations << "\n";
  if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
}

int cmd_gen(const std::string& source, const std::string& out) {
  write_output(out, write_graph(load_graph(source)));
  return kExitOk;
}

int cmd_stats(const std::string& source) {
  const Graph g = load_graph(source);
  const auto k4 = find_k4(g);
  const std::int64_t t = count_triangles(g);
  int dmin = g.num_vertices() > 0 ? g.num_vertices() : 0, dmax = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    dmin = std::min(dmin, static_cast<int>(g.degree(v)));
    dmax = std::max(dmax, static_cast<int>(g.degree(v)));
  }
  std::cout << "vertices: " << g.num_vertices() << "\n";
  std::cout << "edges: " << g.num_edges() << "\n";
  std::cout << "triangles: " << t << "\n";
  std::cout << "two-t: " << 2 * t << "\n";
  std::cout << "k4-free: " << (k4 ? "no" : "yes") << "\n";
  if (k4) std::cout << "k4-witness: " << (*k4)[0] << " " << (*k4)[1] << " " << (*k4)[2] << " " << (*k4)[3] << "\n";
  std::cout << "degree-min: " << dmin << "\n";
  std::cout << "degree-max: " << dmax << "\n";
  std::cout << "degree-mean: "
            << fmt(g.num_vertices() > 0 ? 2.0 * static_cast<double>(g.num_edges()) / g.num_vertices() : 0.0)
            << "\n";
  std::cout << "hash: " << graph_hash(g) << "\n";
  return kExitOk;
}

int cmd_hg(const std::string& source, const std::string& out, bool allow_k4) {
  const TriangleGraph tg = build_triangle_graph(load_graph(source), allow_k4 ? K4Policy::kAllow : K4Policy::kReject);
  write_output(out, write_graph(tg.h));
  return kExitOk;
}

void to_stderr(const std::string& line) { std::cerr << line << "\n"; }

int cmd_bound(const std::string& source, const std::string& method, int budget, std::uint64_t seed,
              bool allow_k4, bool verbose) {
  const TriangleGraph tg = build_triangle_graph(load_graph(source), allow_k4 ? K4Policy::kAllow : K4Policy::kReject);
  BoundReport r = eig_upper_bound(tg);
  if (method == "dual" || (method == "auto" && !(r.upper && *r.upper < static_cast<double>(tg.two_t())))) {
    DualOptions opt;
    opt.budget = budget;
    opt.seed = seed;
    if (verbose) opt.log = to_stderr;
    BoundReport dual = dual_upper_bound(tg, opt);
    if (method == "dual" || (dual.upper && (!r.upper || *dual.upper < *r.upper))) r = std::move(dual);
  }
  print_report(r, tg.two_t());
  if (!r.upper) throw NumericalFailure("no upper bound could be established");
  return kExitOk;
}

int cmd_cut(const std::string& source, int rank, int trials, int restarts, std::uint64_t seed,
            bool allow_k4) {
  const TriangleGraph tg = build_triangle_graph(load_graph(source), allow_k4 ? K4Policy::kAllow : K4Policy::kReject);
  CutSearchOptions opt;
  opt.rank = rank;
  opt.trials = trials;
  opt.restarts = restarts;
  opt.seed = seed;
  opt.target = tg.two_t();
  opt.threads = default_threads();
  const BoundReport r = lowrank_lower_bound(tg.h, opt);
  const std::int64_t size = r.lower.value_or(0);
  std::cout << "cut: " << size << "\n";
  std::cout << "two-t: " << tg.two_t() << "\n";
  if (size == tg.two_t()) {
    const EdgeColoring c = coloring_from_cut(tg, r.cut->assignment);
    std::cout << "monochromatic-triangles: " << count_monochromatic_triangles(tg.host, c) << "\n";
    std::cout << "verdict: NOT_ARROWS\n";
  } else {
    std::cout << "verdict: UNDECIDED\n";
  }
  return kExitOk;
}

int cmd_decide(const std::string& source, const std::string& effort, std::uint64_t seed,
               const std::string& cert_path, bool allow_k4, bool verbose) {
  const Graph g = load_graph(source);
  DecideOptions opt;
  opt.effort = parse_effort(effort);
  opt.seed = seed;
  opt.k4_policy = allow_k4 ? K4Policy::kAllow : K4Policy::kReject;
  opt.threads = default_threads();
  if (verbose) opt.log = to_stderr;
  const ArrowDecision d = decide_arrowing(g, opt);
  std::cout << "verdict: " << to_string(d.verdict) << "\n";
  std::cout << "two-t: " << d.two_t << "\n";
  std::cout << "best-upper: " << (d.best_upper ? fmt(*d.best_upper) : std::string("none")) << "\n";
  std::cout << "best-lower: " << (d.best_lower ? std::to_string(*d.best_lower) : std::string("none")) << "\n";
  for (const BoundReport& r : d.reports) {
    std::cout << "stage: " << to_string(r.method);
    if (r.upper) std::cout << " upper=" << fmt(*r.upper) << (r.certified ? " certified" : "");
    if (r.upper && r.certified && (r.method == BoundMethod::kEig || r.method == BoundMethod::kDual)) {
      std::cout << " tier=" << to_string(r.tier);
    }
    if (r.lower) std::cout << " lower=" << *r.lower;
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
  }
  if (d.certificate) {
    std::cout << "certificate: " << certificate_kind(*d.certificate) << "\n";
    if (!cert_path.empty()) {
      CertificateFile file{graph_hash(g), d.two_t, *d.certificate};
      write_output(cert_path, write_certificate(file));
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& source, const std::string& cert_path) {
  const Graph g = load_graph(source);
  CertificateFile file;
  try {
    file = parse_certificate(read_file(cert_path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), cert_path + ": " + e.reason());
  }
  std::cout << "kind: " << certificate_kind(file.certificate) << "\n";
  if (file.graph_hash != graph_hash(g)) {
    std::cout << "result: VERIFICATION-FAILED\nreason: certificate is for a different graph\n";
    return kExitOk;
  }
  const VerifyResult v = verify_certificate(g, file.certificate);
  const std::int64_t two_t = 2 * count_triangles(g);
  bool accepted = v.accepted;
  std::string reason = v.reason;
  if (file.two_t != two_t) {
    accepted = false;
    reason = "stated two-t " + std::to_string(file.two_t) + " differs from " + std::to_string(two_t);
  }
  if (v.bound) std::cout << "bound: " << fmt(*v.bound) << "\n";
  if (v.tier) std::cout << "tier: " << to_string(*v.tier) << "\n";
  std::cout << "two-t: " << two_t << "\n";
  std::cout << "result: " << (accepted ? "VERIFIED" : "VERIFICATION-FAILED") << "\n";
  std::cout << "reason: " << reason << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folkman-graph arrowing toolkit: triangle graphs, MAX-CUT bounds and certificates"};
  app.require_subcommand(1);

  std::string source, out, method = "auto", effort = "standard", cert, cert_in;
  int budget = 24, rank = 0, trials = 32, restarts = 100;
  std::uint64_t seed = 1;
  bool allow_k4 = false, verbose = false;

  auto* gen = app.add_subcommand("gen", "Write a graph file for a name, recipe or file");
  gen->add_option("graph", source, "Registry name, recipe (G(n,r), L(n,s), K<n>, C<n>) or file")->required();
  gen->add_option("-o,--output", out, "Output file (default stdout)");

  auto* stats = app.add_subcommand("stats", "Vertex, edge and triangle counts, K4-freeness, degrees");
  stats->add_option("graph", source)->required();

  auto* hg = app.add_subcommand("hg", "Write the triangle graph H_G");
  hg->add_option("graph", source)->required();
  hg->add_option("-o,--output", out);
  hg->add_flag("--allow-k4", allow_k4, "Accept graphs containing a K4");

  auto* bound = app.add_subcommand("bound", "Upper bound on the maximum cut of H_G");
  bound->add_option("graph", source)->required();
  bound->add_option("--method", method)->check(CLI::IsMember({"eig", "dual", "auto"}));
  bound->add_option("--budget", budget, "Dual iterates")->check(CLI::NonNegativeNumber);
  bound->add_option("--seed", seed);
  bound->add_flag("--allow-k4", allow_k4);
  bound->add_flag("-v,--verbose", verbose, "Dual progress on stderr");

  auto* cut = app.add_subcommand("cut", "Search for a large cut of H_G");
  cut->add_option("graph", source)->required();
  cut->add_option("--rank", rank, "Vector dimension (0 = automatic)")->check(CLI::NonNegativeNumber);
  cut->add_option("--trials", trials, "Hyperplanes per restart")->check(CLI::PositiveNumber);
  cut->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  cut->add_option("--seed", seed);
  cut->add_flag("--allow-k4", allow_k4);

  auto* decide = app.add_subcommand("decide", "Decide whether G arrows (3,3)");
  decide->add_option("graph", source)->required();
  decide->add_option("--effort", effort)->check(CLI::IsMember({"quick", "standard", "deep"}));
  decide->add_option("--seed", seed);
  decide->add_option("--cert", cert, "Write the certificate here");
  decide->add_flag("--allow-k4", allow_k4);
  decide->add_flag("-v,--verbose", verbose, "Dual progress on stderr");

  auto* verify = app.add_subcommand("verify", "Replay a certificate against a graph");
  verify->add_option("graph", source)->required();
  verify->add_option("certificate", cert_in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) return cmd_gen(source, out);
    if (*stats) return cmd_stats(source);
    if (*hg) return cmd_hg(source, out, allow_k4);
    if (*bound) return cmd_bound(source, method, budget, seed, allow_k4, verbose);
    if (*cut) return cmd_cut(source, rank, trials, restarts, seed, allow_k4);
    if (*decide) return cmd_decide(source, effort, seed, cert, allow_k4, verbose);
    if (*verify) return cmd_verify(source, cert_in);
  } catch (const K4FoundError& e) {
    const auto& w = e.witness();
    std::cerr << "error: NOT-FOLKMAN-CANDIDATE: contains the 4-clique " << w[0] << " " << w[1] << " "
              << w[2] << " " << w[3] << " (use --allow-k4 to proceed)\n";
    return kExitInput;
  } catch (const NumericalFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
