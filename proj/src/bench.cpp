#include "intlap/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "intlap/chordal.hpp"
#include "intlap/errors.hpp"
#include "intlap/generators.hpp"
#include "intlap/strictly_chordal.hpp"
#include "intlap/twins.hpp"

namespace intlap {

double fit_exponent(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("need at least two points to fit");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

namespace {

template <typename F>
double fastest(int repeats, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, repeats); ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  // Guards log() against a zero reading on coarse clocks.
  return std::max(best, 1e-9);
}

Graph breadth_first_renumbered(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Vertex> id(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; static_cast<std::size_t>(s) < n; ++s) {
    if (id[s] >= 0) continue;
    id[s] = static_cast<Vertex>(queue.size());
    queue.push_back(s);
    for (std::size_t head = queue.size() - 1; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (id[w] >= 0) continue;
        id[w] = static_cast<Vertex>(queue.size());
        queue.push_back(w);
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(id[u], id[v]);
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[id[v]] = g.labels()[v];
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph bench_graph(std::size_t target, std::uint64_t seed, BenchFamily family, BenchOrder order) {
  Graph g;
  if (family == BenchFamily::Gnp) {
    g = gen_gnp(seed, static_cast<int>(target), 0.5);
  } else {
    // Block sizes average 3 (two new vertices per block); each vertex gains
    // 0.5 twins on average.
    const int blocks = std::max<int>(1, static_cast<int>(target / 3));
    g = gen_strictly_chordal(seed, blocks, 4, 1);
  }
  return order == BenchOrder::BreadthFirst ? breadth_first_renumbered(g) : g;
}

}  // namespace

BenchResult run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                      BenchFamily family, int repeats, BenchOrder order) {
  BenchResult result;
  for (std::size_t target : sizes) {
    const Graph g = bench_graph(target, seed, family, order);
    BenchRow row;
    row.target = target;
    row.n = g.n();
    row.m = g.m();
    volatile std::size_t sink = 0;
    row.twin_seconds = fastest(repeats, [&] { sink = sink + twin_partition(g).true_classes.size(); });
    row.chordal_seconds = fastest(repeats, [&] {
      try {
        sink = sink + recognize_chordal(g).chordal;
      } catch (const HypothesisError&) {
      }
    });
    row.pipeline_seconds = fastest(repeats, [&] {
      try {
        sink = sink + structural_pipeline(g).entries.size();
      } catch (const HypothesisError&) {
      }
    });
    result.rows.push_back(row);
  }
  if (result.rows.size() >= 2) {
    std::vector<double> size, twin, chordal, pipeline;
    for (const auto& r : result.rows) {
      size.push_back(static_cast<double>(r.n + r.m));
      twin.push_back(r.twin_seconds);
      chordal.push_back(r.chordal_seconds);
      pipeline.push_back(r.pipeline_seconds);
    }
    result.twin_exponent = fit_exponent(size, twin);
    result.chordal_exponent = fit_exponent(size, chordal);
    result.pipeline_exponent = fit_exponent(size, pipeline);
  }
  return result;
}

std::string BenchResult::to_text() const {
  std::string out = "target        n          m     twin_s  chordal_s  pipeline_s\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%6zu %8zu %10zu %10.5f %10.5f %11.5f\n", r.target, r.n, r.m,
                  r.twin_seconds, r.chordal_seconds, r.pipeline_seconds);
    out += buf;
  }
  if (rows.size() >= 2) {
    std::snprintf(buf, sizeof buf,
                  "fitted exponent vs n+m: twin_partition %.3f  recognize_chordal %.3f  "
                  "structural_pipeline %.3f\n",
                  twin_exponent, chordal_exponent, pipeline_exponent);
    out += buf;
  }
  return out;
}

}  // namespace intlap
