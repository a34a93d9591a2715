#pragma once

// Unchecked building blocks shared by the public entry points. Callers
// establish connectivity once; entries come back unsorted.

#include <vector>

#include "intlap/chordal.hpp"
#include "intlap/structural_spectrum.hpp"
#include "intlap/twins.hpp"

namespace intlap::detail {

std::vector<SpectralEntry> twin_entries(const Graph& g, const TwinPartition& p);

ChordalRecognition recognize_connected(const Graph& g);

}  // namespace intlap::detail
