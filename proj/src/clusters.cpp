#include "intlap/clusters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "intlap/errors.hpp"
#include "intlap/spectral.hpp"
#include "intlap/twins.hpp"

namespace intlap {

std::vector<Cluster> find_clusters(const Graph& g) {
  std::vector<Cluster> candidates;
  for (const auto& cls : twin_partition(g).false_classes) {
    auto nb = g.neighbors(cls.members.front());
    candidates.push_back({cls.members, VertexSet(nb.begin(), nb.end())});
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Cluster& a, const Cluster& b) {
    if (a.k() != b.k()) return a.k() > b.k();
    return a.false_twins.front() < b.false_twins.front();
  });

  std::vector<char> used_f(g.n(), 0), used_s(g.n(), 0);
  std::vector<Cluster> chosen;
  for (auto& c : candidates) {
    // False-twin classes are disjoint already; only S can collide.
    if (std::any_of(c.neighborhood.begin(), c.neighborhood.end(),
                    [&](Vertex v) { return used_s[v]; })) {
      continue;
    }
    for (Vertex v : c.false_twins) used_f[v] = 1;
    for (Vertex v : c.neighborhood) used_s[v] = 1;
    chosen.push_back(std::move(c));
  }
  return chosen;
}

namespace {

void validate(const Graph& g, const std::vector<ClusterAssignment>& assignments) {
  std::vector<char> used_f(g.n(), 0), used_s(g.n(), 0);
  for (const auto& [cluster, overlay] : assignments) {
    if (overlay.n() != cluster.k()) {
      throw std::invalid_argument("overlay order differs from cluster size");
    }
    for (Vertex v : cluster.false_twins) {
      auto nb = g.neighbors(v);
      if (!std::equal(nb.begin(), nb.end(), cluster.neighborhood.begin(),
                      cluster.neighborhood.end())) {
        throw std::invalid_argument("vertex " + g.label(v) + " does not have neighborhood S");
      }
      if (used_f[v]++) throw std::invalid_argument("clusters overlap");
    }
    for (Vertex v : cluster.neighborhood) {
      if (used_s[v]++) throw std::invalid_argument("cluster neighborhoods overlap");
    }
  }
}

}  // namespace

Graph overlay_cluster_graphs(const Graph& g, const std::vector<ClusterAssignment>& assignments) {
  validate(g, assignments);
  std::vector<Edge> edges = g.edges();
  for (const auto& [cluster, overlay] : assignments) {
    for (const auto& [a, b] : overlay.edges()) {
      edges.emplace_back(cluster.false_twins[a], cluster.false_twins[b]);
    }
  }
  return Graph::from_edges(g.n(), edges, g.labels());
}

FactorizationReport verify_cluster_factorization(
    const Graph& g, const std::vector<ClusterAssignment>& assignments) {
  for (const auto& a : assignments) {
    const auto& h = a.overlay;
    if (h.n() == 0) throw std::invalid_argument("empty cluster overlay graph");
    for (Vertex v = 0; static_cast<std::size_t>(v) < h.n(); ++v) {
      if (h.degree(v) != h.degree(0)) {
        throw HypothesisError("cluster overlay graph is not regular");
      }
    }
  }
  const Graph combined = overlay_cluster_graphs(g, assignments);
  const LaplacianMatrix lap = laplacian(combined);
  const std::vector<double> spectrum = numeric_spectrum(lap);

  struct Prediction {
    double lambda;
    std::size_t cluster;
  };
  std::vector<Prediction> predictions;
  for (std::size_t j = 0; j < assignments.size(); ++j) {
    const auto& [cluster, overlay] = assignments[j];
    std::vector<double> mu = numeric_spectrum(laplacian(overlay));
    // mu is ascending; mu[0] = 0 belongs to the all-ones vector.
    for (std::size_t i = 1; i < mu.size(); ++i) {
      predictions.push_back({static_cast<double>(cluster.ell()) + mu[i], j});
    }
  }
  std::sort(predictions.begin(), predictions.end(),
            [](const Prediction& a, const Prediction& b) { return a.lambda < b.lambda; });

  FactorizationReport report;
  for (std::size_t i = 0; i < predictions.size();) {
    std::size_t j = i + 1;
    while (j < predictions.size() &&
           predictions[j].lambda - predictions[i].lambda <= kIntegerMatchTolerance) {
      ++j;
    }
    FactorizationCheck check;
    check.cluster = predictions[i].cluster;
    check.lambda = predictions[i].lambda;
    check.predicted = j - i;
    if (auto k = as_integer(check.lambda)) {
      check.integral = true;
      check.lambda = static_cast<double>(*k);
      check.observed = integer_multiplicity(lap, *k);
    } else {
      check.observed = static_cast<std::size_t>(
          std::count_if(spectrum.begin(), spectrum.end(), [&](double x) {
            return std::abs(x - check.lambda) <= kIntegerMatchTolerance;
          }));
    }
    check.ok = check.observed >= check.predicted;
    report.ok = report.ok && check.ok;
    report.checks.push_back(check);
    i = j;
  }
  return report;
}

std::string FactorizationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "cluster " << c.cluster << " lambda " << c.lambda
        << (c.integral ? " exact" : " numeric") << " predicted " << c.predicted << " observed "
        << c.observed << (c.ok ? " ok" : " FAIL") << '\n';
  }
  out << (ok ? "factorization holds" : "factorization violated") << '\n';
  return out.str();
}

}  // namespace intlap
