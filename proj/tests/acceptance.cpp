// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "intlap/bench.hpp"
#include "intlap/chordal.hpp"
#include "intlap/generators.hpp"
#include "intlap/spectral.hpp"
#include "intlap/strictly_chordal.hpp"
#include "intlap/twins.hpp"

using namespace intlap;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << what;
    else detail << "; " << what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool spectrum_close(const std::vector<double>& got, const std::vector<double>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i] - want[i]) > 1e-4) return false;
  return true;
}

std::size_t exact(const Graph& g, std::int64_t lambda) {
  return integer_multiplicity(laplacian(g), lambda);
}

CliqueStructure structure(const Graph& g) { return *recognize_chordal(g).structure; }

void eleven_vertex(Outcome& o) {
  const auto start = Clock::now();
  const Graph g = fixture("fig3");
  o.require(spectrum_close(numeric_spectrum(laplacian(g)),
                           {0, 1.18541, 2.61293, 3.72314, 5.64590, 6, 6.55734, 7, 7, 9, 9.27527}),
            "numeric spectrum differs");
  std::map<std::int64_t, std::int64_t> t6;
  for (const auto& e : structural_pipeline(g).entries) {
    if (e.provenance == Provenance::SeparatorT6) t6[e.lambda] += e.multiplicity;
  }
  o.require(t6 == std::map<std::int64_t, std::int64_t>{{6, 1}, {7, 2}, {9, 1}},
            "separator entries differ");
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  o.detail << (o.pass ? "spectrum within 1e-4, 6^(1) 7^(2) 9^(1) from separators" : "");
}

void thirteen_vertex(Outcome& o) {
  const auto start = Clock::now();
  const Graph g = fixture("fig4");
  o.require(spectrum_close(numeric_spectrum(laplacian(g)),
                           {0, 0.23941, 1, 1, 1, 1.53342, 3, 3, 3, 3.21582, 4, 4, 11.01135}),
            "numeric spectrum differs");
  const auto fams = boundary_families(structure(g));
  const auto b = boundary_eigenvalues(fams);
  std::int64_t total = 0;
  for (const auto& e : b.entries) total += e.multiplicity;
  o.require(total == 8, "boundary total " + std::to_string(total));
  o.require(condense(b) == std::map<std::int64_t, std::int64_t>{{1, 3}, {3, 3}, {4, 2}},
            "boundary condensed " + format_condensed(condense(b)));
  std::size_t starred = 0;
  for (const auto& f : fams) {
    if (!f.in_starred_set()) continue;
    ++starred;
    o.require(uniquely_provided_count(f) == 3, "uniquely provided " + std::to_string(uniquely_provided_count(f)));
  }
  o.require(starred == 1, "expected one family with several boundary cliques");
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  o.detail << (o.pass ? "spectrum within 1e-4, " + format_condensed(condense(b)) + ", uniquely provided 3" : "");
}

void twelve_vertex(Outcome& o) {
  const Graph g = fixture("fig1");
  const auto s = twin_eigenvalues(g, twin_partition(g));
  std::set<std::tuple<std::int64_t, std::int64_t, Provenance>> got;
  for (const auto& e : s.entries) got.emplace(e.lambda, e.multiplicity, e.provenance);
  o.require(got.count({2, 2, Provenance::FalseTwin}) == 1, "missing (2, 2, FalseTwin)");
  o.require(got.count({5, 2, Provenance::TrueTwin}) == 1, "missing (5, 2, TrueTwin)");
  const auto m2 = exact(g, 2), m5 = exact(g, 5);
  o.require(m2 >= 2, "exact multiplicity of 2 is " + std::to_string(m2));
  o.require(m5 >= 2, "exact multiplicity of 5 is " + std::to_string(m5));
  if (o.pass) o.detail << "exact multiplicities: 2 -> " << m2 << ", 5 -> " << m5;
}

void soundness(Outcome& o) {
  const auto start = Clock::now();
  int graphs = 0, violations = 0, entries = 0;
  std::size_t largest = 0;
  for (std::uint64_t seed = 1; graphs < 300; ++seed) {
    const Graph g = gen_strictly_chordal(seed, 2 + static_cast<int>(seed % 20), 5, 2);
    if (g.n() > 60) continue;
    ++graphs;
    largest = std::max(largest, g.n());
    const auto lap = laplacian(g);
    for (const auto& [lambda, mult] : condense(structural_pipeline(g))) {
      ++entries;
      if (static_cast<std::int64_t>(integer_multiplicity(lap, lambda)) < mult) {
        ++violations;
        o.require(false, "seed " + std::to_string(seed) + " lambda " + std::to_string(lambda));
      }
    }
  }
  const double t = seconds_since(start);
  o.require(t < 120.0, "took " + std::to_string(t) + " s");
  o.detail << (o.pass ? "" : "; ") << graphs << " graphs (n <= " << largest << "), " << entries
           << " eigenvalues checked, " << violations << " violations, " << t << " s";
}

void equivalence(Outcome& o) {
  const Graph gem = fixture("gem");
  const Graph dart = fixture("dart");
  int graphs = 0, strict = 0, mismatches = 0;
  for (std::uint64_t seed = 1; graphs < 500; ++seed) {
    // Vary density so both outcomes are well represented.
    const double p = 0.2 + 0.1 * static_cast<double>(seed % 8);
    const Graph g = gen_random_chordal(seed, 3 + static_cast<int>(seed % 7), p);
    ++graphs;
    const auto r = recognize_chordal(g);
    const bool disjoint = recognize_strictly_chordal(g, *r.structure);
    const bool forbidden_free = !oracle::has_induced(g, gem) && !oracle::has_induced(g, dart);
    strict += disjoint;
    if (disjoint != forbidden_free) {
      ++mismatches;
      o.require(false, "seed " + std::to_string(seed));
    }
  }
  o.detail << (o.pass ? "" : "; ") << graphs << " chordal graphs (n <= 9), " << strict
           << " with disjoint separators, " << mismatches << " mismatches";
}

void oracle_agreement(Outcome& o) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const char* name : {"fig1", "fig3", "fig4", "gem", "dart", "k5", "star3", "path4", "cycle4"})
    graphs.emplace_back(name, fixture(name));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 39);
    Graph g = seed % 3 == 0 ? gen_strictly_chordal(seed, 1 + n / 3, 4, 1)
                            : gen_gnp(seed, n, 0.05 + 0.05 * static_cast<double>(seed % 6));
    if (g.n() > 40) g = gen_gnp(seed, n, 0.1);
    graphs.emplace_back("seed " + std::to_string(seed), std::move(g));
  }
  std::size_t checks = 0;
  for (const auto& [name, g] : graphs) {
    const auto lap = laplacian(g);
    const auto spectrum = numeric_spectrum(lap);
    for (std::int64_t lambda = 0; lambda <= static_cast<std::int64_t>(g.n()); ++lambda) {
      ++checks;
      const auto numeric = std::count_if(spectrum.begin(), spectrum.end(), [&](double x) {
        return std::abs(x - static_cast<double>(lambda)) <= 1e-6;
      });
      if (static_cast<std::size_t>(numeric) != integer_multiplicity(lap, lambda)) {
        o.require(false, name + " lambda " + std::to_string(lambda));
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << graphs.size() << " graphs, " << checks << " integer candidates";
}

void separators(Outcome& o) {
  int graphs = 0, strict = 0;
  for (std::uint64_t seed = 1; graphs < 100; ++seed) {
    const Graph g = gen_random_chordal(seed, 2 + static_cast<int>(seed % 11), 0.5);
    ++graphs;
    const auto cs = structure(g);
    std::set<VertexSet> mvs;
    for (const auto& s : minimal_vertex_separators(cs)) mvs.insert(s.vertices);
    if (mvs != oracle::minimal_uv_separators(g)) o.require(false, "uv seed " + std::to_string(seed));
    if (recognize_strictly_chordal(g, cs)) {
      ++strict;
      if (mvs != oracle::minimal_separators(g)) o.require(false, "S seed " + std::to_string(seed));
    }
  }
  o.detail << (o.pass ? "" : "; ") << graphs << " chordal graphs (n <= 12), " << strict
           << " strictly chordal";
}

void complexity(Outcome& o) {
  const auto start = Clock::now();
  const BenchResult r = run_bench({20000, 40000, 80000, 160000}, 1, BenchFamily::StrictlyChordal, 5);
  const double t = seconds_since(start);
  char buf[200];
  std::snprintf(buf, sizeof buf, "exponents twin %.3f chordal %.3f pipeline %.3f, %.1f s",
                r.twin_exponent, r.chordal_exponent, r.pipeline_exponent, t);
  o.require(r.twin_exponent <= 1.25, "twin exponent too high");
  o.require(r.pipeline_exponent <= 1.25, "pipeline exponent too high");
  o.require(t < 300.0, "too slow");
  o.detail << (o.pass ? "" : "; ") << buf;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"eleven-vertex example: spectrum and separator eigenvalues", eleven_vertex},
      {"thirteen-vertex example: spectrum and boundary eigenvalues", thirteen_vertex},
      {"twelve-vertex example: twin eigenvalues", twelve_vertex},
      {"soundness sweep", soundness},
      {"disjoint separators vs forbidden subgraphs", equivalence},
      {"numeric vs exact oracle", oracle_agreement},
      {"separators vs brute force", separators},
      {"linear growth", complexity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
