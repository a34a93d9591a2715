// Chordal recognition and clique trees via maximum cardinality search.
//
// The search visits vertices in order of the number of already-visited
// neighbors. Reversed, that order is a perfect elimination ordering exactly
// when the graph is chordal (Tarjan & Yannakakis, 1984). While searching, a
// new maximal clique starts whenever the weight of the visited vertex fails
// to increase (Blair & Peyton, 1993); its parent in the clique tree is the
// clique of the most recently visited neighbor, and the visited
// neighborhood is the separator on that tree edge.

#include "intlap/chordal.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <cstdint>

#include "detail.hpp"
#include "intlap/errors.hpp"

namespace intlap {

VertexSet CliqueStructure::simplicial_members(std::size_t clique) const {
  VertexSet out;
  for (Vertex v : cliques[clique]) {
    if (simplicial[v]) out.push_back(v);
  }
  return out;
}

namespace {

// Bucket queue of unvisited vertices keyed by weight, with O(1) moves. Each
// vertex's links, weight and visit index share one record, so a neighbor
// scan touches a single cache line per neighbor.
class WeightBuckets {
 public:
  explicit WeightBuckets(std::size_t n) : head_(n + 1, -1), node_(n) {
    for (std::size_t v = n; v-- > 0;) push(static_cast<Vertex>(v));
  }

  Vertex pop_max() {
    while (max_ > 0 && head_[max_] < 0) --max_;
    Vertex v = head_[max_];
    unlink(v);
    return v;
  }

  void increment(Vertex v) {
    unlink(v);
    ++node_[v].weight;
    push(v);
    max_ = std::max(max_, node_[v].weight);
  }

  std::int32_t weight(Vertex v) const { return node_[v].weight; }
  std::int32_t visit_index(Vertex v) const { return node_[v].visit; }
  void set_visit_index(Vertex v, std::int32_t i) { node_[v].visit = i; }

 private:
  struct Node {
    Vertex next = -1;
    Vertex prev = -1;
    std::int32_t weight = 0;
    std::int32_t visit = -1;
  };

  void push(Vertex v) {
    Node& x = node_[v];
    Vertex& head = head_[x.weight];
    x.prev = -1;
    x.next = head;
    if (head >= 0) node_[head].prev = v;
    head = v;
  }

  void unlink(Vertex v) {
    const Node& x = node_[v];
    if (x.prev >= 0) {
      node_[x.prev].next = x.next;
    } else {
      head_[x.weight] = x.next;
    }
    if (x.next >= 0) node_[x.next].prev = x.prev;
  }

  std::vector<Vertex> head_;
  std::vector<Node> node_;
  std::int32_t max_ = 0;
};

// Shortest path from a to b whose interior avoids N[center]. Empty if none.
std::vector<Vertex> path_avoiding(const Graph& g, Vertex center, Vertex a, Vertex b) {
  const std::size_t n = g.n();
  std::vector<char> blocked(n, 0);
  blocked[center] = 1;
  for (Vertex w : g.neighbors(center)) blocked[w] = 1;
  blocked[b] = 0;
  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(a);
  seen[a] = 1;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == b) break;
    for (Vertex y : g.neighbors(x)) {
      if (seen[y] || blocked[y]) continue;
      // a and b are non-adjacent, so b is never reached directly from a.
      seen[y] = 1;
      parent[y] = x;
      q.push(y);
    }
  }
  if (!seen[b]) return {};
  std::vector<Vertex> path;
  for (Vertex x = b; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> cycle_from(const Graph& g, Vertex center, Vertex a, Vertex b) {
  std::vector<Vertex> path = path_avoiding(g, center, a, b);
  if (path.empty()) return {};
  path.insert(path.begin(), center);
  return path;
}

// Exhaustive search: some vertex v has non-adjacent neighbors a, b joined by
// a path outside N[v].
std::vector<Vertex> find_chordless_cycle(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<int> component(n);
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    std::fill(component.begin(), component.end(), -1);
    component[v] = -2;
    for (Vertex w : g.neighbors(v)) component[w] = -2;
    int next_id = 0;
    for (Vertex s = 0; static_cast<std::size_t>(s) < n; ++s) {
      if (component[s] != -1) continue;
      std::vector<Vertex> stack{s};
      component[s] = next_id;
      std::vector<Vertex> attach;
      std::vector<char> attached(n, 0);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
          if (component[y] == -1) {
            component[y] = next_id;
            stack.push_back(y);
          } else if (component[y] == -2 && y != v && !attached[y]) {
            attached[y] = 1;
            attach.push_back(y);
          }
        }
      }
      ++next_id;
      for (std::size_t i = 0; i < attach.size(); ++i) {
        for (std::size_t j = i + 1; j < attach.size(); ++j) {
          if (!g.adjacent(attach[i], attach[j])) {
            return cycle_from(g, v, attach[i], attach[j]);
          }
        }
      }
    }
  }
  return {};
}

}  // namespace

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Vertex> order;
  order.reserve(n);
  WeightBuckets buckets(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex x = buckets.pop_max();
    buckets.set_visit_index(x, static_cast<std::int32_t>(i));
    order.push_back(x);
    for (Vertex y : g.neighbors(x)) {
      if (buckets.visit_index(y) < 0) buckets.increment(y);
    }
  }
  return order;
}

namespace {

// Tarjan-Yannakakis check. Returns (v, a, b) with a, b non-adjacent later
// neighbors of v if `peo` is not a perfect elimination ordering.
std::optional<std::array<Vertex, 3>> peo_violation(const Graph& g,
                                                   std::span<const Vertex> peo) {
  const std::size_t n = g.n();
  struct State {
    std::int32_t position;
    std::int32_t index;
    Vertex follower;
  };
  std::vector<State> st(n);
  for (std::size_t i = 0; i < n; ++i) st[peo[i]].position = static_cast<std::int32_t>(i);
  for (std::int32_t i = 0; static_cast<std::size_t>(i) < n; ++i) {
    const Vertex w = peo[i];
    st[w].follower = w;
    st[w].index = i;
    for (Vertex v : g.neighbors(w)) {
      if (st[v].position < i) {
        st[v].index = i;
        if (st[v].follower == v) st[v].follower = w;
      }
    }
    for (Vertex v : g.neighbors(w)) {
      if (st[v].position < i && st[st[v].follower].index < i) {
        return std::array<Vertex, 3>{v, st[v].follower, w};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order) {
  return !peo_violation(g, order).has_value();
}

ChordalRecognition recognize_chordal(const Graph& g) {
  if (!is_connected(g)) {
    throw HypothesisError("chordal recognition requires a connected graph");
  }
  return detail::recognize_connected(g);
}

namespace detail {

ChordalRecognition recognize_connected(const Graph& g) {
  const std::size_t n = g.n();
  ChordalRecognition result;

  // Search and tentative clique tree in one pass. Cliques grow only at the
  // end, so both cliques and edge separators live in flat buffers.
  std::vector<Vertex> visit;
  visit.reserve(n);
  std::vector<std::uint32_t> clique_of(n, 0);
  std::vector<Vertex> clique_buf;
  std::vector<std::size_t> clique_start;
  std::vector<Vertex> sep_buf;
  std::vector<std::size_t> sep_start{0};
  std::vector<std::uint32_t> edge_parent, edge_child;
  clique_buf.reserve(n + g.m());
  WeightBuckets buckets(n);
  std::size_t prev_weight = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex x = buckets.pop_max();
    const auto w = static_cast<std::size_t>(buckets.weight(x));
    buckets.set_visit_index(x, static_cast<std::int32_t>(i));
    visit.push_back(x);

    const bool fresh = i == 0 || w <= prev_weight;
    if (fresh) clique_start.push_back(clique_buf.size());
    Vertex latest = -1;
    for (Vertex y : g.neighbors(x)) {
      if (buckets.visit_index(y) >= 0) {
        if (fresh) {
          clique_buf.push_back(y);
          sep_buf.push_back(y);
        }
        if (latest < 0 || buckets.visit_index(y) > buckets.visit_index(latest)) latest = y;
      } else {
        buckets.increment(y);
      }
    }
    clique_buf.push_back(x);
    if (fresh && w > 0) {
      sep_start.push_back(sep_buf.size());
      edge_parent.push_back(clique_of[latest]);
      edge_child.push_back(static_cast<std::uint32_t>(clique_start.size() - 1));
    } else {
      sep_buf.resize(sep_start.back());
    }
    clique_of[x] = static_cast<std::uint32_t>(clique_start.size() - 1);
    prev_weight = w;
  }
  clique_start.push_back(clique_buf.size());

  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  if (auto bad = peo_violation(g, peo)) {
    result.chordal = false;
    auto [v, a, b] = *bad;
    result.witness_cycle = cycle_from(g, v, a, b);
    if (result.witness_cycle.empty()) result.witness_cycle = find_chordless_cycle(g);
    return result;
  }

  CliqueStructure cs;
  cs.peo = std::move(peo);
  cs.cliques.reserve(clique_start.size() - 1);
  for (std::size_t c = 0; c + 1 < clique_start.size(); ++c) {
    VertexSet clique(clique_buf.begin() + static_cast<std::ptrdiff_t>(clique_start[c]),
                     clique_buf.begin() + static_cast<std::ptrdiff_t>(clique_start[c + 1]));
    std::sort(clique.begin(), clique.end());
    cs.cliques.push_back(std::move(clique));
  }

  // Deduplicate edge separators with an open-addressing table over the flat
  // buffer; slots hold the id of the first edge carrying each separator.
  const std::size_t edges = edge_parent.size();
  auto range = [&](std::size_t e) {
    return std::span<Vertex>(sep_buf.data() + sep_start[e], sep_start[e + 1] - sep_start[e]);
  };
  std::size_t capacity = 16;
  while (capacity < 2 * edges) capacity *= 2;
  std::vector<std::int32_t> slot(capacity, -1);
  std::vector<std::size_t> edge_separator(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    auto sep = range(e);
    std::sort(sep.begin(), sep.end());
    std::uint64_t h = 0x9E3779B97F4A7C15ull * (sep.size() + 1);
    for (Vertex v : sep) h = (h ^ static_cast<std::uint64_t>(v)) * 0xBF58476D1CE4E5B9ull;
    std::size_t at = (h ^ (h >> 31)) & (capacity - 1);
    while (slot[at] >= 0 && !std::ranges::equal(range(static_cast<std::size_t>(slot[at])), sep)) {
      at = (at + 1) & (capacity - 1);
    }
    if (slot[at] < 0) {
      slot[at] = static_cast<std::int32_t>(e);
      edge_separator[e] = cs.separators.size();
      cs.separators.push_back({VertexSet(sep.begin(), sep.end()), 0});
    } else {
      edge_separator[e] = edge_separator[static_cast<std::size_t>(slot[at])];
    }
    ++cs.separators[edge_separator[e]].multiplicity;
    cs.tree_edges.push_back({edge_parent[e], edge_child[e], edge_separator[e]});
  }

  cs.vertex_clique_offsets.assign(n + 1, 0);
  for (Vertex v : clique_buf) ++cs.vertex_clique_offsets[v + 1];
  for (std::size_t v = 0; v < n; ++v) cs.vertex_clique_offsets[v + 1] += cs.vertex_clique_offsets[v];
  cs.vertex_cliques.resize(cs.vertex_clique_offsets[n]);
  {
    std::vector<std::size_t> fill(cs.vertex_clique_offsets.begin(), cs.vertex_clique_offsets.end() - 1);
    for (std::size_t c = 0; c + 1 < clique_start.size(); ++c)
      for (std::size_t i = clique_start[c]; i < clique_start[c + 1]; ++i)
        cs.vertex_cliques[fill[clique_buf[i]]++] = c;
  }
  cs.simplicial.assign(n, 0);
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    cs.simplicial[v] = cs.cliques_of(v).size() == 1;
  }

  cs.vertex_separator_id.assign(n, CliqueStructure::kNoSeparator);
  for (std::size_t s = 0; s < cs.separators.size(); ++s) {
    for (Vertex v : cs.separators[s].vertices) {
      int& id = cs.vertex_separator_id[v];
      id = id == CliqueStructure::kNoSeparator ? static_cast<int>(s)
                                               : CliqueStructure::kSeveralSeparators;
    }
  }

  result.chordal = true;
  result.structure = std::move(cs);
  return result;
}

}  // namespace detail

std::vector<Separator> minimal_vertex_separators(const CliqueStructure& cs) {
  return cs.separators;
}

std::vector<std::size_t> boundary_cliques(const CliqueStructure& cs) {
  const std::size_t k = cs.cliques.size();
  std::vector<std::uint32_t> simplicial(k, 0);
  for (std::size_t q = 0; q < k; ++q)
    for (Vertex v : cs.cliques[q]) simplicial[q] += cs.simplicial[v] ? 1 : 0;

  // A tree-edge separator of Q consists of non-simplicial vertices of Q, so
  // equal size means equality.
  std::vector<char> boundary(k, 0);
  for (const auto& e : cs.tree_edges) {
    const std::size_t size = cs.separators[e.separator].vertices.size();
    for (std::size_t q : {e.parent, e.child}) {
      if (simplicial[q] > 0 && cs.cliques[q].size() - simplicial[q] == size) boundary[q] = 1;
    }
  }

  std::vector<std::size_t> out;
  std::vector<std::size_t> shared(k, 0);
  std::vector<std::size_t> touched;
  for (std::size_t q = 0; q < k; ++q) {
    if (simplicial[q] == 0) continue;
    const std::size_t non_simplicial = cs.cliques[q].size() - simplicial[q];
    bool found = boundary[q] || (non_simplicial == 0 && k > 1);
    if (!found) {
      for (Vertex v : cs.cliques[q]) {
        if (cs.simplicial[v]) continue;
        for (std::size_t c : cs.cliques_of(v)) {
          if (c == q) continue;
          if (shared[c]++ == 0) touched.push_back(c);
          if (shared[c] == non_simplicial) found = true;
        }
      }
      for (std::size_t c : touched) shared[c] = 0;
      touched.clear();
    }
    if (found) out.push_back(q);
  }
  return out;
}

}  // namespace intlap
