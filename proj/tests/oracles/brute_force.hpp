#pragma once

// Slow, independent reference implementations used only by the tests.

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

#include "intlap/graph.hpp"

namespace oracle {

using intlap::Graph;
using intlap::Vertex;
using intlap::VertexSet;

// Coefficients c_0..c_n of det(xI - L), low degree first, computed with
// Faddeev-LeVerrier over exact integers.
std::vector<mpz_class> laplacian_charpoly(const Graph& g);

// Multiplicity of `root` as a root of `poly`, by repeated synthetic division.
std::size_t root_multiplicity(const std::vector<mpz_class>& poly, std::int64_t root);

// Union over all non-adjacent pairs u, v of the minimal uv-separators, found
// by trying every vertex subset. n <= 16.
std::set<VertexSet> minimal_uv_separators(const Graph& g);

// Sets S whose removal splits some component and no proper subset of which
// does. n <= 16.
std::set<VertexSet> minimal_separators(const Graph& g);

// Maximal cliques by subset enumeration. n <= 20.
std::set<VertexSet> maximal_cliques(const Graph& g);

// Induced copy of `pattern` (five vertices at most) anywhere in g.
bool has_induced(const Graph& g, const Graph& pattern);

// Classes of size >= 2 of vertices with identical open (closed=false) or
// closed neighborhoods, by pairwise comparison.
std::set<VertexSet> twin_classes(const Graph& g, bool closed);

// Every biconnected component induces a clique.
bool is_block_graph(const Graph& g);

// Vertices of `cycle` form an induced cycle of length >= 4, in order.
bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle);

// Every vertex's later neighbors in `order` are pairwise adjacent.
bool later_neighbors_are_cliques(const Graph& g, const std::vector<Vertex>& order);

}  // namespace oracle
