#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "intlap/graph.hpp"

namespace intlap {

/// A (k, l)-cluster: k false twins F sharing the neighborhood S, |S| = l.
struct Cluster {
  VertexSet false_twins;  // F
  VertexSet neighborhood; // S

  std::size_t k() const { return false_twins.size(); }
  std::size_t ell() const { return neighborhood.size(); }

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// Graph H placed on the vertices of a cluster.
struct ClusterAssignment {
  Cluster cluster;
  Graph overlay;  // on |F| vertices; vertex i maps to the i-th smallest id of F
};

/// Pairwise disjoint clusters (disjoint F and disjoint S) chosen greedily
/// from the false-twin classes, largest |F| first, ties by smallest member.
std::vector<Cluster> find_clusters(const Graph& g);

/// G with every overlay's edges added onto its cluster. Throws
/// std::invalid_argument on size mismatch, overlapping clusters, or a
/// cluster that is not a set of false twins of g.
Graph overlay_cluster_graphs(const Graph& g, const std::vector<ClusterAssignment>& assignments);

struct FactorizationCheck {
  std::size_t cluster = 0;
  double lambda = 0;             // l_j + mu_i(L_j)
  bool integral = false;         // checked exactly when true
  std::size_t predicted = 0;     // aggregate over all clusters
  std::size_t observed = 0;
  bool ok = false;
};

struct FactorizationReport {
  bool ok = true;
  std::vector<FactorizationCheck> checks;
  std::string to_text() const;
};

/// Checks that every l_j + mu_i(L_j), i < k_j, occurs in the spectrum of
/// the overlaid graph at least as often as predicted. Integer predictions
/// are checked with exact multiplicities, others against the numeric
/// spectrum. Throws HypothesisError if some overlay is not regular.
FactorizationReport verify_cluster_factorization(const Graph& g,
                                                 const std::vector<ClusterAssignment>& assignments);

}  // namespace intlap
