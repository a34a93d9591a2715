#include "intlap/twins.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "detail.hpp"
#include "intlap/errors.hpp"

namespace intlap {

namespace {

// Sorting the neighborhood strings lexicographically, one symbol at a time.
// Symbols u = 0, 1, ... are processed in increasing order; every key that
// contains u descends from its current trie node to that node's u-child.
// Keys end in the same node exactly when they are equal. Nodes whose last
// key leaves are recycled, so at most n + max degree nodes are live.
class KeyTrie {
 public:
  explicit KeyTrie(std::size_t keys) : node_(keys, 0), count_{static_cast<std::uint32_t>(keys)} {
    stamp_.push_back(kNone);
    child_.push_back(0);
  }

  void descend(Vertex key, std::uint32_t symbol) {
    const std::uint32_t from = node_[key];
    if (stamp_[from] != symbol) {
      stamp_[from] = symbol;
      child_[from] = allocate();
    }
    const std::uint32_t to = child_[from];
    node_[key] = to;
    ++count_[to];
    if (--count_[from] == 0) free_.push_back(from);
  }

  // Keys grouped by final node, both classes and members ascending.
  std::vector<VertexSet> classes() const {
    std::vector<std::int32_t> slot(count_.size(), -1);
    std::vector<VertexSet> out;
    for (Vertex v = 0; static_cast<std::size_t>(v) < node_.size(); ++v) {
      const std::uint32_t c = node_[v];
      if (count_[c] < 2) continue;
      if (slot[c] < 0) {
        slot[c] = static_cast<std::int32_t>(out.size());
        out.emplace_back().reserve(count_[c]);
      }
      out[slot[c]].push_back(v);
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  std::uint32_t allocate() {
    std::uint32_t id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      count_[id] = 0;
      stamp_[id] = kNone;
    } else {
      id = static_cast<std::uint32_t>(count_.size());
      count_.push_back(0);
      stamp_.push_back(kNone);
      child_.push_back(0);
    }
    return id;
  }

  std::vector<std::uint32_t> node_;
  std::vector<std::uint32_t> count_, stamp_, child_;
  std::vector<std::uint32_t> free_;
};

std::vector<TwinClass> with_degrees(const Graph& g, std::vector<VertexSet> groups) {
  std::vector<TwinClass> out;
  out.reserve(groups.size());
  for (auto& members : groups) {
    const std::size_t d = g.degree(members.front());
    out.push_back({std::move(members), d});
  }
  return out;
}

}  // namespace

TwinPartition twin_partition(const Graph& g) {
  const std::size_t n = g.n();
  TwinPartition p;

  // Open keys N(v) and closed keys N[v]; u occurs in N(v) iff v is in N(u).
  KeyTrie open(n), closed(n);
  for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
    const auto symbol = static_cast<std::uint32_t>(u);
    closed.descend(u, symbol);
    for (Vertex v : g.neighbors(u)) {
      open.descend(v, symbol);
      closed.descend(v, symbol);
    }
    if (g.degree(u) + 1 == n) p.universal.push_back(u);
  }
  p.false_classes = with_degrees(g, open.classes());
  p.true_classes = with_degrees(g, closed.classes());

#ifndef NDEBUG
  // A set of size >= 2 cannot be both independent and a clique.
  std::vector<char> in_false(n, 0);
  for (const auto& c : p.false_classes)
    for (Vertex v : c.members) in_false[v] = 1;
  for (const auto& c : p.true_classes)
    for (Vertex v : c.members) assert(!in_false[v]);
#endif
  return p;
}

namespace detail {

std::vector<SpectralEntry> twin_entries(const Graph& g, const TwinPartition& p) {
  const std::size_t n = g.n();
  std::vector<SpectralEntry> out;
  for (const auto& c : p.false_classes) {
    out.push_back({static_cast<std::int64_t>(c.degree),
                   static_cast<std::int64_t>(c.members.size() - 1), Provenance::FalseTwin,
                   c.members, {}});
  }
  const bool with_universal = !p.universal.empty() && p.universal.size() != n;
  bool folded = false;
  for (const auto& c : p.true_classes) {
    // The universal vertices form one true class of degree n - 1; its
    // eigenvectors are among those of the universal entry.
    if (with_universal && c.degree + 1 == n) {
      folded = true;
      continue;
    }
    out.push_back({static_cast<std::int64_t>(c.degree + 1),
                   static_cast<std::int64_t>(c.members.size() - 1), Provenance::TrueTwin,
                   c.members, {}});
  }
  if (with_universal) {
    SpectralEntry e{static_cast<std::int64_t>(n), static_cast<std::int64_t>(p.universal.size()),
                    Provenance::Universal, p.universal, {}};
    if (folded) e.also.push_back(Provenance::TrueTwin);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

StructuralSpectrum twin_eigenvalues(const Graph& g, const TwinPartition& p) {
  if (!is_connected(g)) {
    throw HypothesisError("twin eigenvalues require a connected graph");
  }
  StructuralSpectrum out{detail::twin_entries(g, p), false};
  sort_entries(out);
  return out;
}

}  // namespace intlap
