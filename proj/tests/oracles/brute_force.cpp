#include "brute_force.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  assert(g.n() <= 32);
  std::vector<Mask> adj(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

VertexSet members(Mask m) {
  VertexSet out;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

// Components of the subgraph induced by `alive`, as masks.
std::vector<Mask> components(const std::vector<Mask>& adj, Mask alive) {
  std::vector<Mask> out;
  while (alive) {
    Mask comp = alive & (~alive + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    alive &= ~comp;
  }
  return out;
}

bool separates(const std::vector<Mask>& adj, Mask all, Mask s, Vertex u, Vertex v) {
  for (Mask c : components(adj, all & ~s)) {
    if (c >> u & 1) return !(c >> v & 1);
  }
  return true;
}

}  // namespace

std::vector<mpz_class> laplacian_charpoly(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    a[v][v] = static_cast<long>(g.degree(v));
    for (Vertex w : g.neighbors(v)) a[v][w] = -1;
  }
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  std::vector<std::vector<mpz_class>> am(n, std::vector<mpz_class>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (std::size_t t = 0; t < n; ++t) {
          if (a[i][t] != 0) s += a[i][t] * m[t][j];
        }
        am[i][j] = s;
      }
      trace += am[i][i];
    }
    assert(trace % static_cast<long>(k) == 0);
    c[n - k] = -trace / static_cast<long>(k);
    std::swap(m, am);
  }
  return c;
}

std::size_t root_multiplicity(const std::vector<mpz_class>& poly, std::int64_t root) {
  std::vector<mpz_class> p = poly;
  const mpz_class r = static_cast<long>(root);
  std::size_t count = 0;
  while (p.size() > 1) {
    // Divide by (x - r), highest coefficient first.
    std::vector<mpz_class> q(p.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
      carry = carry * r + p[i];
      q[i - 1] = carry;
    }
    if (carry * r + p[0] != 0) break;
    p = std::move(q);
    ++count;
  }
  return count;
}

std::set<VertexSet> minimal_uv_separators(const Graph& g) {
  const std::size_t n = g.n();
  assert(n <= 16);
  const auto adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  std::set<VertexSet> out;
  for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
    for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
      if (adj[u] >> v & 1) continue;
      const Mask pool = all & ~(Mask{1} << u) & ~(Mask{1} << v);
      // Separation is monotone in S, so minimality only needs single removals.
      for (Mask s = pool;; s = (s - 1) & pool) {
        if (separates(adj, all, s, u, v)) {
          bool minimal = true;
          for (Mask t = s; t && minimal; t &= t - 1) {
            if (separates(adj, all, s & ~(t & ~(t - 1)), u, v)) minimal = false;
          }
          if (minimal) out.insert(members(s));
        }
        if (s == 0) break;
      }
    }
  }
  return out;
}

std::set<VertexSet> minimal_separators(const Graph& g) {
  const std::size_t n = g.n();
  assert(n <= 16);
  const auto adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;

  // S separates when some component of G loses connectivity: G - S has
  // more components than there are components of G that S leaves nonempty.
  std::vector<char> sep(std::size_t{1} << n, 0);
  for (Mask s = 0; s <= all; ++s) {
    std::size_t touched = 0;
    for (Mask c : components(adj, all)) touched += (c & ~s) != 0;
    sep[s] = components(adj, all & ~s).size() > touched;
  }
  // below[s]: some proper subset of s separates. Subsets of s with one
  // element removed cover all proper subsets transitively.
  std::vector<char> below(std::size_t{1} << n, 0);
  std::set<VertexSet> out;
  for (Mask s = 1; s <= all; ++s) {
    for (Mask t = s; t; t &= t - 1) {
      const Mask sub = s & ~(t & ~(t - 1));
      if (sep[sub] || below[sub]) {
        below[s] = 1;
        break;
      }
    }
    if (sep[s] && !below[s]) out.insert(members(s));
  }
  return out;
}

std::set<VertexSet> maximal_cliques(const Graph& g) {
  const std::size_t n = g.n();
  assert(n <= 20);
  const auto adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  std::set<VertexSet> out;
  for (Mask s = 1; s <= all; ++s) {
    bool clique = true;
    Mask common = all;
    for (Mask t = s; t && clique; t &= t - 1) {
      const int v = std::countr_zero(t);
      if (((adj[v] | (Mask{1} << v)) & s) != s) clique = false;
      common &= adj[v];
    }
    if (clique && (common & ~s) == 0) out.insert(members(s));
  }
  return out;
}

bool has_induced(const Graph& g, const Graph& pattern) {
  const std::size_t k = pattern.n();
  const std::size_t n = g.n();
  if (k > n) return false;
  assert(k <= 5);
  // Encode an ordered k-tuple's adjacency as bits over the k(k-1)/2 pairs.
  auto code = [k](auto&& adjacent) {
    Mask c = 0;
    int bit = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j, ++bit)
        if (adjacent(i, j)) c |= Mask{1} << bit;
    return c;
  };
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::unordered_set<Mask> codes;
  do {
    codes.insert(code([&](std::size_t i, std::size_t j) {
      return pattern.adjacent(static_cast<Vertex>(perm[i]), static_cast<Vertex>(perm[j]));
    }));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Vertex> pick(k);
  std::function<bool(std::size_t, Vertex)> choose = [&](std::size_t depth, Vertex from) {
    if (depth == k) {
      return codes.count(code([&](std::size_t i, std::size_t j) {
               return g.adjacent(pick[i], pick[j]);
             })) > 0;
    }
    for (Vertex v = from; static_cast<std::size_t>(v) < n; ++v) {
      pick[depth] = v;
      if (choose(depth + 1, v + 1)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

std::set<VertexSet> twin_classes(const Graph& g, bool closed) {
  const std::size_t n = g.n();
  auto key = [&](Vertex v) {
    std::set<Vertex> s(g.neighbors(v).begin(), g.neighbors(v).end());
    if (closed) s.insert(v);
    return s;
  };
  std::vector<char> done(n, 0);
  std::set<VertexSet> out;
  for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
    if (done[u]) continue;
    VertexSet cls{u};
    for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
      if (!done[v] && key(u) == key(v)) {
        cls.push_back(v);
        done[v] = 1;
      }
    }
    if (cls.size() >= 2) out.insert(cls);
  }
  return out;
}

bool is_block_graph(const Graph& g) {
  // Hopcroft-Tarjan biconnected components with an edge stack.
  const std::size_t n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<intlap::Edge> stack;
  int time = 0;
  bool ok = true;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = time++;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::set<Vertex> comp;
          std::size_t edges = 0;
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            comp.insert(e.first);
            comp.insert(e.second);
            ++edges;
            if (e == intlap::Edge{v, w}) break;
          }
          if (edges != comp.size() * (comp.size() - 1) / 2) ok = false;
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return ok;
}

bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

bool later_neighbors_are_cliques(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<std::size_t> pos(g.n());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.adjacent(later[i], later[j])) return false;
  }
  return true;
}

}  // namespace oracle
