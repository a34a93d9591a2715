#pragma once

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string_view>

#include "intlap/graph.hpp"
#include "intlap/spectral.hpp"

namespace support {

inline intlap::Vertex id(const intlap::Graph& g, std::string_view label) {
  const intlap::Vertex v = g.find(label);
  REQUIRE_MESSAGE(v >= 0, "no vertex labelled " << label);
  return v;
}

// Sorted ids of the given labels.
inline intlap::VertexSet ids(const intlap::Graph& g, std::initializer_list<std::string_view> labels) {
  intlap::VertexSet out;
  for (auto l : labels) out.push_back(id(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t exact(const intlap::Graph& g, std::int64_t lambda) {
  return intlap::integer_multiplicity(intlap::laplacian(g), lambda);
}

}  // namespace support
