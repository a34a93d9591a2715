// intlap: integer Laplacian eigenvalues from graph structure.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 hypothesis violation (disconnected input, missing required structure).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "intlap/bench.hpp"
#include "intlap/errors.hpp"
#include "intlap/generators.hpp"
#include "intlap/graph.hpp"
#include "intlap/report.hpp"
#include "intlap/spectral.hpp"
#include "intlap/strictly_chordal.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

intlap::Graph load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return intlap::parse_edge_list(text);
}

double default_tolerance() {
  if (const char* env = std::getenv("SPECTRAL_STRUCT_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end != env && *end == '\0' && tol > 0) return tol;
    std::cerr << "warning: ignoring invalid SPECTRAL_STRUCT_TOL='" << env << "'\n";
  }
  return intlap::kDefaultTolerance;
}

int cmd_analyze(const std::string& path, bool json, const std::string& require) {
  const intlap::Graph g = load(path);
  const intlap::AnalysisReport report = intlap::analyze(g);
  std::cout << (json ? intlap::to_json(report) : intlap::to_text(report));
  if (require == "chordal" && !report.chordal) {
    std::cerr << "error: graph is not chordal\n";
    return kExitHypothesis;
  }
  if (require == "strictly-chordal" && !report.strictly_chordal) {
    std::cerr << "error: graph is not strictly chordal\n";
    return kExitHypothesis;
  }
  return 0;
}

int cmd_spectrum(const std::string& path, bool exact, double tol) {
  const intlap::Graph g = load(path);
  const auto lap = intlap::laplacian(g);
  if (exact) {
    std::cout << intlap::format_exact(intlap::exact_report(lap)) << '\n';
  } else {
    std::cout << intlap::format_spectrum(intlap::numeric_spectrum(lap, tol)) << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  const intlap::Graph g = load(path);
  const auto spectrum = intlap::structural_pipeline(g);
  const auto lap = intlap::laplacian(g);
  bool ok = true;
  for (const auto& [lambda, mult] : intlap::condense(spectrum)) {
    const auto exact = intlap::integer_multiplicity(lap, lambda);
    const bool good = static_cast<std::int64_t>(exact) >= mult;
    ok = ok && good;
    std::cout << lambda << " claimed " << mult << " exact " << exact << (good ? " ok" : " VIOLATION")
              << '\n';
  }
  std::cout << (ok ? "PASS" : "FAIL") << (spectrum.partial ? " (partial)" : "") << '\n';
  return ok ? 0 : kExitVerifyFailed;
}

struct GenOptions {
  std::string family;
  std::uint64_t seed = 1;
  int blocks = 8;
  int max_block = 4;
  int max_copies = 2;
  int n = 10;
  double p = 0.3;
};

int cmd_gen(const GenOptions& o) {
  intlap::Graph g;
  if (o.family == "block") {
    g = intlap::gen_block_graph(o.seed, o.blocks, o.max_block);
  } else if (o.family == "strictly-chordal") {
    g = intlap::gen_strictly_chordal(o.seed, o.blocks, o.max_block, o.max_copies);
  } else if (o.family == "chordal") {
    g = intlap::gen_random_chordal(o.seed, o.n, o.p);
  } else if (o.family == "connected") {
    g = intlap::gen_random_connected(o.seed, o.n, o.p);
  } else if (o.family == "gnp") {
    g = intlap::gen_gnp(o.seed, o.n, o.p);
  } else {
    try {
      g = intlap::fixture(o.family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::cout << intlap::to_edge_list(g);
  return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, const std::string& family,
              std::uint64_t seed, int repeats, const std::string& order) {
  const auto fam =
      family == "gnp" ? intlap::BenchFamily::Gnp : intlap::BenchFamily::StrictlyChordal;
  const auto ord =
      order == "generated" ? intlap::BenchOrder::Generated : intlap::BenchOrder::BreadthFirst;
  std::cout << intlap::run_bench(sizes, seed, fam, repeats, ord).to_text();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer Laplacian eigenvalues from graph structure"};
  app.require_subcommand(1);

  std::string path;
  bool json = false, text = false;
  std::string require;
  auto* analyze = app.add_subcommand("analyze", "Structural report for an edge-list file");
  analyze->add_option("path", path, "Edge-list file, or - for stdin")->required();
  auto* json_flag = analyze->add_flag("--json", json, "JSON output");
  analyze->add_flag("--text", text, "Text output (default)")->excludes(json_flag);
  analyze->add_option("--require", require, "Fail with exit 3 unless the graph has this structure")
      ->check(CLI::IsMember({"chordal", "strictly-chordal"}));

  bool exact = false, full = false;
  double tol = default_tolerance();
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum");
  spectrum->add_option("path", path, "Edge-list file, or - for stdin")->required();
  auto* exact_flag = spectrum->add_flag("--exact-integers", exact, "Exact integer multiplicities");
  spectrum->add_flag("--full", full, "Full numeric spectrum (default)")->excludes(exact_flag);
  spectrum->add_option("--tol", tol, "Jacobi tolerance (env SPECTRAL_STRUCT_TOL)")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check every structural eigenvalue exactly");
  verify->add_option("path", path, "Edge-list file, or - for stdin")->required();

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Emit a generated graph as an edge list");
  gen->add_option("family", gen_opts.family,
                  "block | strictly-chordal | chordal | connected | gnp | fixture name "
                  "(fig1, fig3, fig4, gem, dart, k5, star3, path4, cycle4)")
      ->required();
  gen->add_option("--seed", gen_opts.seed, "PRNG seed");
  gen->add_option("--blocks", gen_opts.blocks, "Number of blocks")->check(CLI::PositiveNumber);
  gen->add_option("--max-block", gen_opts.max_block, "Largest block size")
      ->check(CLI::Range(2, 1 << 20));
  gen->add_option("--max-copies", gen_opts.max_copies, "Most true twins added per vertex")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--n", gen_opts.n, "Vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--p", gen_opts.p, "Edge probability")->check(CLI::Range(0.0, 1.0));

  std::vector<std::size_t> sizes{20000, 40000, 80000, 160000};
  std::string bench_family = "strictly-chordal";
  std::uint64_t bench_seed = 1;
  int repeats = 3;
  std::string bench_order = "bfs";
  auto* bench = app.add_subcommand("bench", "Doubling experiment with fitted growth exponents");
  bench->add_option("--sizes", sizes, "Target vertex counts")->delimiter(',');
  bench->add_option("--family", bench_family)->check(CLI::IsMember({"strictly-chordal", "gnp"}));
  bench->add_option("--seed", bench_seed);
  bench->add_option("--repeats", repeats)->check(CLI::PositiveNumber);
  bench->add_option("--order", bench_order, "Vertex numbering: bfs renumbers, generated keeps ids")
      ->check(CLI::IsMember({"bfs", "generated"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, json, require);
    if (spectrum->parsed()) return cmd_spectrum(path, exact, tol);
    if (verify->parsed()) return cmd_verify(path);
    if (gen->parsed()) return cmd_gen(gen_opts);
    if (bench->parsed()) return cmd_bench(sizes, bench_family, bench_seed, repeats, bench_order);
  } catch (const intlap::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const intlap::HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
