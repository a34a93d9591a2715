#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "intlap/graph.hpp"
#include "intlap/structural_spectrum.hpp"

namespace intlap {

struct TwinClass {
  VertexSet members;  // sorted, size >= 2
  std::size_t degree = 0;

  friend bool operator==(const TwinClass&, const TwinClass&) = default;
};

/// Maximal false-twin classes (equal open neighborhoods), maximal true-twin
/// classes (equal closed neighborhoods) and universal vertices. Classes are
/// ordered by their smallest member.
struct TwinPartition {
  std::vector<TwinClass> false_classes;
  std::vector<TwinClass> true_classes;
  VertexSet universal;

  friend bool operator==(const TwinPartition&, const TwinPartition&) = default;
};

/// Groups vertices by identical open and closed neighborhoods.
TwinPartition twin_partition(const Graph& g);

/// Eigenvalues forced by twin classes and universal vertices. The class of
/// universal vertices is folded into the universal entry. Throws
/// HypothesisError if `g` is disconnected.
StructuralSpectrum twin_eigenvalues(const Graph& g, const TwinPartition& p);

}  // namespace intlap
