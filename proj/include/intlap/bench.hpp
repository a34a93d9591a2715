#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace intlap {

enum class BenchFamily { StrictlyChordal, Gnp };

// Vertex numbering of the timed graphs. Generated keeps the generator's ids,
// where a new block hangs off a uniformly random earlier vertex, so
// neighbors sit far apart in memory and cache misses grow with n.
// BreadthFirst renumbers from vertex 0 first, which keeps the fit closer to
// the operation count.
enum class BenchOrder { BreadthFirst, Generated };

struct BenchRow {
  std::size_t target = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double twin_seconds = 0;
  double chordal_seconds = 0;
  double pipeline_seconds = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  // Least-squares slopes of log(time) against log(n + m).
  double twin_exponent = 0;
  double chordal_exponent = 0;
  double pipeline_exponent = 0;

  std::string to_text() const;
};

/// Slope of the least-squares line through (log x, log y).
double fit_exponent(const std::vector<double>& x, const std::vector<double>& y);

/// Times twin_partition, recognize_chordal and structural_pipeline on one
/// generated graph per target order, keeping the fastest of `repeats` runs.
/// StrictlyChordal graphs come from blocks of size <= 4 with at most one
/// true twin per vertex; Gnp uses p = 1/2.
BenchResult run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                      BenchFamily family = BenchFamily::StrictlyChordal, int repeats = 3,
                      BenchOrder order = BenchOrder::BreadthFirst);

}  // namespace intlap
