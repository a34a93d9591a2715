#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "intlap/graph.hpp"

namespace intlap {

struct CliqueTreeEdge {
  std::size_t parent = 0;
  std::size_t child = 0;
  std::size_t separator = 0;  // index into CliqueStructure::separators

  friend bool operator==(const CliqueTreeEdge&, const CliqueTreeEdge&) = default;
};

struct Separator {
  VertexSet vertices;
  std::size_t multiplicity = 0;  // number of clique-tree edges realizing it

  friend bool operator==(const Separator&, const Separator&) = default;
};

/// Clique tree of a connected chordal graph together with its minimal
/// vertex separators.
struct CliqueStructure {
  static constexpr int kNoSeparator = -1;
  static constexpr int kSeveralSeparators = -2;

  std::vector<Vertex> peo;                  // perfect elimination ordering
  std::vector<VertexSet> cliques;           // maximal cliques, members sorted
  std::vector<CliqueTreeEdge> tree_edges;   // spanning tree on clique ids
  std::vector<Separator> separators;        // deduplicated edge intersections
  std::vector<char> simplicial;             // per vertex
  // Per vertex: the id of the only separator containing it, kNoSeparator,
  // or kSeveralSeparators. Never kSeveralSeparators in strictly chordal graphs.
  std::vector<int> vertex_separator_id;
  // Clique ids containing each vertex (CSR).
  std::vector<std::size_t> vertex_clique_offsets;
  std::vector<std::size_t> vertex_cliques;

  std::span<const std::size_t> cliques_of(Vertex v) const {
    return {vertex_cliques.data() + vertex_clique_offsets[v],
            vertex_clique_offsets[v + 1] - vertex_clique_offsets[v]};
  }
  /// Simplicial members of a clique, ascending.
  VertexSet simplicial_members(std::size_t clique) const;

  friend bool operator==(const CliqueStructure&, const CliqueStructure&) = default;
};

struct ChordalRecognition {
  bool chordal = false;
  std::optional<CliqueStructure> structure;
  // A chordless cycle of length >= 4 when not chordal, in cycle order.
  std::vector<Vertex> witness_cycle;
};

/// Maximum cardinality search, in visit order. Ties go to the vertex that
/// most recently reached the maximum weight; the search starts at vertex 0.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);

/// True iff every vertex's later neighbors in `order` form a clique.
bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order);

/// Recognizes chordal graphs and builds their clique tree in O(n + m).
/// Throws HypothesisError on disconnected input.
ChordalRecognition recognize_chordal(const Graph& g);

std::vector<Separator> minimal_vertex_separators(const CliqueStructure& cs);

/// Ids of boundary cliques, ascending.
std::vector<std::size_t> boundary_cliques(const CliqueStructure& cs);

}  // namespace intlap
