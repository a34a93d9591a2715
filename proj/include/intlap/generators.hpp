#pragma once

#include <cstdint>
#include <string_view>

#include "intlap/graph.hpp"

namespace intlap {

/// xorshift64* (Vigna, 2016), seeded through one SplitMix64 step so that
/// every seed, including 0, gives a nonzero state.
///
///   state ^= state >> 12; state ^= state << 25; state ^= state >> 27;
///   return state * 0x2545F4914F6CDD1D;
///
/// Bounded draws use plain modulo reduction; the bias is irrelevant for
/// graph generation and keeps streams reproducible across languages.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    state_ = z ^ (z >> 31);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// True with probability p (53-bit resolution).
  bool bernoulli(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::uint64_t state_;
};

/// Connected block graph: a first clique of random size in
/// [2, max_block_size], then `blocks - 1` cliques of random size each glued
/// onto a uniformly chosen existing vertex. Throws std::invalid_argument if
/// blocks < 1 or max_block_size < 2.
Graph gen_block_graph(std::uint64_t seed, int blocks, int max_block_size);

/// Replaces every vertex by a clique of 1 + c_v true twins, c_v uniform in
/// [0, max_copies], drawn in vertex order. Originals keep their ids; copies
/// follow, grouped by original.
Graph expand_true_twins(const Graph& g, std::uint64_t seed, int max_copies);

/// gen_block_graph followed by expand_true_twins (same seed stream split).
Graph gen_strictly_chordal(std::uint64_t seed, int blocks, int max_block_size, int max_copies);

/// Connected chordal graph: each new vertex joins a random clique of the
/// current graph (greedy over the neighbors of a random vertex, each
/// accepted with probability p).
Graph gen_random_chordal(std::uint64_t seed, int n, double p);

/// Random spanning tree plus every other pair independently with
/// probability p. Always connected.
Graph gen_random_connected(std::uint64_t seed, int n, double p);

/// Erdos-Renyi G(n, p); may be disconnected.
Graph gen_gnp(std::uint64_t seed, int n, double p);

/// Named graphs: fig1, fig3, fig4, gem, dart, and k<n>, star<n> (K_{1,n}),
/// path<n>, cycle<n>; the parameter may also be written in parentheses, as
/// in k(4). Throws std::invalid_argument for unknown names.
Graph fixture(std::string_view name);

}  // namespace intlap
