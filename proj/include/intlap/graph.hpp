#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace intlap {

using Vertex = std::int32_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in CSR form; every neighbor list is strictly
/// increasing. Labels are display names only; all algorithms work on ids.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws std::invalid_argument on
  /// self-loops, duplicate edges (in either orientation) or out-of-range ids.
  /// If `labels` is empty, labels default to the decimal vertex id.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return labels_.size(); }
  std::size_t m() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }
  bool adjacent(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Id of the vertex with the given label, or -1.
  Vertex find(std::string_view label) const;

  /// All edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n()) [[unlikely]] throw_out_of_range(v);
  }
  [[noreturn]] static void throw_out_of_range(Vertex v);

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<std::string> labels_;
};

/// Degree of `v`; throws std::out_of_range for an invalid id.
std::size_t degree(const Graph& g, Vertex v);

/// True iff `g` has at most one connected component.
bool is_connected(const Graph& g);

/// Number of connected components.
std::size_t component_count(const Graph& g);

/// Parses line-oriented edge-list text.
///
/// Each non-comment line holds two label tokens "u v"; `#` starts a comment.
/// The first non-comment line may be an "n m" header: two non-negative
/// integers where m equals the number of edge lines that follow and n is at
/// least the number of distinct labels. Vertices beyond the labelled ones
/// are isolated and get the label "_<id>". Labels map to ids in order of
/// first appearance. Throws ParseError with the offending line number.
Graph parse_edge_list(std::string_view text);

/// Writes "n m" followed by one "u v" line per edge, sorted by id pair.
std::string to_edge_list(const Graph& g);

/// Labels of `vs` joined as "{a,b,c}".
std::string format_set(const Graph& g, std::span<const Vertex> vs);

/// Subgraph induced by `vs` (ids renumbered in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

}  // namespace intlap
