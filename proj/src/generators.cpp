#include "intlap/generators.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace intlap {

Graph gen_block_graph(std::uint64_t seed, int blocks, int max_block_size) {
  if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");
  if (max_block_size < 2) throw std::invalid_argument("max_block_size must be >= 2");
  Xorshift64Star rng(seed);
  std::vector<Edge> edges;
  Vertex n = static_cast<Vertex>(rng.uniform(2, max_block_size));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  for (int b = 1; b < blocks; ++b) {
    const auto size = static_cast<Vertex>(rng.uniform(2, max_block_size));
    const auto anchor = static_cast<Vertex>(rng.uniform(0, n - 1));
    std::vector<Vertex> members{anchor};
    for (Vertex i = 1; i < size; ++i) members.push_back(n++);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph expand_true_twins(const Graph& g, std::uint64_t seed, int max_copies) {
  if (max_copies < 0) throw std::invalid_argument("max_copies must be >= 0");
  Xorshift64Star rng(seed);
  const std::size_t n = g.n();
  // Copies of v take the ids right after v's own new id, so each true-twin
  // group is a contiguous run.
  std::vector<Vertex> start(n + 1, 0);
  std::vector<std::string> labels;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    const auto copies = rng.uniform(0, max_copies);
    start[v + 1] = start[v] + 1 + static_cast<Vertex>(copies);
    labels.push_back(g.label(v));
    for (std::int64_t c = 1; c <= copies; ++c) labels.push_back(g.label(v) + "_" + std::to_string(c));
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v)
    for (Vertex a = start[v]; a < start[v + 1]; ++a)
      for (Vertex b = a + 1; b < start[v + 1]; ++b) edges.emplace_back(a, b);
  for (const auto& [u, v] : g.edges())
    for (Vertex a = start[u]; a < start[u + 1]; ++a)
      for (Vertex b = start[v]; b < start[v + 1]; ++b) edges.emplace_back(a, b);
  return Graph::from_edges(static_cast<std::size_t>(start[n]), edges, std::move(labels));
}

Graph gen_strictly_chordal(std::uint64_t seed, int blocks, int max_block_size, int max_copies) {
  return expand_true_twins(gen_block_graph(seed, blocks, max_block_size),
                           seed ^ 0xD1B54A32D192ED03ull, max_copies);
}

Graph gen_random_chordal(std::uint64_t seed, int n, double p) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Xorshift64Star rng(seed);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto root = static_cast<Vertex>(rng.uniform(0, v - 1));
    std::vector<Vertex> candidates;
    for (Vertex w = 0; w < v; ++w)
      if (adj[root][w]) candidates.push_back(w);
    // Fisher-Yates with the generator's own stream.
    for (std::size_t i = candidates.size(); i > 1; --i) {
      std::swap(candidates[i - 1], candidates[rng.uniform(0, static_cast<std::int64_t>(i) - 1)]);
    }
    std::vector<Vertex> clique{root};
    for (Vertex w : candidates) {
      if (!rng.bernoulli(p)) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return adj[c][w]; })) {
        clique.push_back(w);
      }
    }
    for (Vertex c : clique) {
      adj[c][v] = adj[v][c] = 1;
      edges.emplace_back(c, v);
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph gen_random_connected(std::uint64_t seed, int n, double p) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Xorshift64Star rng(seed);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto parent = static_cast<Vertex>(rng.uniform(0, v - 1));
    adj[parent][v] = adj[v][parent] = 1;
    edges.emplace_back(parent, v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!adj[u][v] && rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph gen_gnp(std::uint64_t seed, int n, double p) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  Xorshift64Star rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

namespace {

Graph lettered(std::size_t n, std::initializer_list<std::pair<char, char>> pairs) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.emplace_back(u - 'a', v - 'a');
  return Graph::from_edges(n, edges, std::move(labels));
}

// Drawn as a single twin-rich component: false twins g,h,i hang off d and
// e, true twins j,k,l sit on b and c.
Graph twin_example() {
  return lettered(12, {{'a', 'b'}, {'c', 'd'}, {'e', 'f'}, {'f', 'a'}, {'g', 'd'}, {'g', 'e'},
                       {'i', 'd'}, {'i', 'e'}, {'h', 'd'}, {'h', 'e'}, {'j', 'b'}, {'j', 'c'},
                       {'j', 'k'}, {'j', 'l'}, {'k', 'b'}, {'k', 'c'}, {'k', 'l'}, {'l', 'b'},
                       {'l', 'c'}});
}

Graph separator_example() {
  return lettered(11, {{'a', 'b'}, {'a', 'c'}, {'b', 'c'}, {'b', 'e'}, {'b', 'd'}, {'b', 'f'},
                       {'c', 'd'}, {'c', 'e'}, {'c', 'f'}, {'d', 'e'}, {'d', 'f'}, {'d', 'k'},
                       {'d', 'g'}, {'d', 'h'}, {'e', 'g'}, {'e', 'f'}, {'e', 'k'}, {'e', 'h'},
                       {'k', 'g'}, {'k', 'h'}, {'k', 'i'}, {'g', 'i'}, {'g', 'h'}, {'h', 'i'},
                       {'j', 'd'}, {'j', 'e'}, {'j', 'h'}, {'j', 'g'}, {'j', 'k'}});
}

// A path a-b-c-d with four cliques hanging off d.
Graph boundary_example() {
  return lettered(13, {{'a', 'b'}, {'b', 'c'}, {'c', 'd'}, {'d', 'e'}, {'d', 'f'}, {'d', 'g'},
                       {'d', 'h'}, {'d', 'i'}, {'d', 'j'}, {'d', 'k'}, {'d', 'l'}, {'e', 'f'},
                       {'g', 'h'}, {'i', 'j'}, {'k', 'l'}, {'l', 'm'}, {'k', 'm'}, {'d', 'm'}});
}

// P4 b-c-d-e plus a adjacent to all of it.
Graph gem() {
  return lettered(5, {{'c', 'd'}, {'c', 'b'}, {'c', 'a'}, {'d', 'a'}, {'d', 'e'}, {'b', 'a'},
                      {'e', 'a'}});
}

// Diamond on a,b,c,d (b,c adjacent to everything in it) plus e pendant on c.
Graph dart() {
  return lettered(5, {{'a', 'b'}, {'a', 'c'}, {'b', 'c'}, {'c', 'e'}, {'b', 'd'}, {'c', 'd'}});
}

int parse_parameter(std::string_view name, std::string_view prefix) {
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  }
  int value = -1;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size() || value < 0) {
    throw std::invalid_argument("bad fixture parameter in '" + std::string(name) + "'");
  }
  return value;
}

}  // namespace

Graph fixture(std::string_view name) {
  if (name == "fig1") return twin_example();
  if (name == "fig3") return separator_example();
  if (name == "fig4") return boundary_example();
  if (name == "gem") return gem();
  if (name == "dart") return dart();

  std::vector<Edge> edges;
  if (name.starts_with("star")) {
    const int leaves = parse_parameter(name, "star");
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(static_cast<std::size_t>(leaves) + 1, edges);
  }
  if (name.starts_with("path")) {
    const int n = parse_parameter(name, "path");
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  }
  if (name.starts_with("cycle")) {
    const int n = parse_parameter(name, "cycle");
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  }
  if (name.starts_with("k")) {
    const int n = parse_parameter(name, "k");
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace intlap
