#pragma once

#include <cstddef>
#include <vector>

#include "intlap/chordal.hpp"
#include "intlap/graph.hpp"
#include "intlap/structural_spectrum.hpp"

namespace intlap {

struct BoundaryMember {
  std::size_t clique = 0;
  std::size_t clique_size = 0;
  VertexSet simplicials;  // P_k, nonempty

  friend bool operator==(const BoundaryMember&, const BoundaryMember&) = default;
};

/// B(S): the boundary cliques containing the separator S.
struct BoundaryFamily {
  std::size_t separator_id = 0;
  VertexSet separator;
  std::vector<BoundaryMember> cliques;
  VertexSet pooled_simplicials;  // union of the P_k
  VertexSet false_twin_subset;   // members of the pool with a false twin in the pool

  bool in_starred_set() const { return cliques.size() > 1; }

  friend bool operator==(const BoundaryFamily&, const BoundaryFamily&) = default;
};

/// True iff distinct minimal vertex separators are pairwise disjoint.
/// `cs.vertex_separator_id` then names each vertex's unique separator.
bool recognize_strictly_chordal(const Graph& g, const CliqueStructure& cs);

/// d(v) + 1 with multiplicity |S| - 1 for every separator S with |S| >= 2.
/// Throws HypothesisError unless `g` is connected and strictly chordal.
StructuralSpectrum separator_eigenvalues(const Graph& g, const CliqueStructure& cs);

/// One family per separator contained in at least one boundary clique, in
/// separator order. Throws HypothesisError when separators overlap.
std::vector<BoundaryFamily> boundary_families(const CliqueStructure& cs);

/// |Q_k| with multiplicity |P_k| - 1 and |S| with multiplicity b - 1 for
/// every family with more than one boundary clique.
StructuralSpectrum boundary_eigenvalues(const std::vector<BoundaryFamily>& families);

/// |Q| with multiplicity |P| - 1 for simplicial cliques outside every family
/// with more than one boundary clique.
StructuralSpectrum non_boundary_simplicial_eigenvalues(
    const CliqueStructure& cs, const std::vector<BoundaryFamily>& families);

/// Eigenvalues of B(S) not already implied by the twin rules.
/// Throws HypothesisError if the family has at most one clique.
std::size_t uniquely_provided_count(const BoundaryFamily& family);

/// Merges entries describing the same eigenvectors. An entry is absorbed by
/// an earlier-kept entry with the same eigenvalue whose anchor contains its
/// anchor and whose multiplicity is at least as large; the absorbed
/// provenance is recorded in `also`. Entries are considered in provenance
/// priority order: Universal, SeparatorT6, BoundaryCliqueSizeC1a,
/// SeparatorCountC1b, NonBoundarySimplicialT3, TrueTwin, FalseTwin.
StructuralSpectrum deduplicate(std::size_t n, std::vector<SpectralEntry> entries);

/// Integer Laplacian eigenvalues with provenance for a connected graph.
/// Strictly chordal inputs get the full structural treatment; any other
/// graph gets the twin/universal entries only, with `partial` set.
StructuralSpectrum structural_pipeline(const Graph& g);

}  // namespace intlap
