#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intlap/graph.hpp"

namespace intlap {

/// Which structural result guarantees an eigenvalue.
enum class Provenance {
  Universal,               // n, one per universal vertex
  FalseTwin,               // common degree d of a false-twin class
  TrueTwin,                // d + 1 for a true-twin class
  SeparatorT6,             // d(v) + 1 for v in a minimal vertex separator
  BoundaryCliqueSizeC1a,   // |Q_k| from a boundary clique of an S*-family
  SeparatorCountC1b,       // |S| with multiplicity b - 1
  NonBoundarySimplicialT3, // |Q| for a simplicial clique outside every S*-family
};

std::string_view to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view name);

/// One guaranteed integer Laplacian eigenvalue with a lower bound on its
/// multiplicity. `anchor` is the vertex set whose structure produces it
/// (the eigenvectors are supported on it, except for Universal entries).
struct SpectralEntry {
  std::int64_t lambda = 0;
  std::int64_t multiplicity = 0;
  Provenance provenance = Provenance::Universal;
  VertexSet anchor;
  // Provenances of entries merged into this one by deduplication.
  std::vector<Provenance> also;

  friend bool operator==(const SpectralEntry&, const SpectralEntry&) = default;
};

struct StructuralSpectrum {
  std::vector<SpectralEntry> entries;
  // Set when only the twin and universal rules could be applied.
  bool partial = false;

  friend bool operator==(const StructuralSpectrum&, const StructuralSpectrum&) = default;
};

/// Sums multiplicities per eigenvalue.
std::map<std::int64_t, std::int64_t> condense(const StructuralSpectrum& s);

/// Sorts entries by (lambda, anchor, provenance).
void sort_entries(StructuralSpectrum& s);

/// "4^(2) 3^(3) 1^(3)": condensed entries, largest eigenvalue first.
std::string format_condensed(const std::map<std::int64_t, std::int64_t>& condensed);

/// "lambda multiplicity provenance anchor"
std::string format_entry(const Graph& g, const SpectralEntry& e);

}  // namespace intlap
