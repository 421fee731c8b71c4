#pragma once

#include <cstdint>

#include "sgi/signed_graph.hpp"

namespace sgi {

/// SplitMix64. Used instead of <random> engines-plus-distributions so that
/// seeded runs reproduce bit-identically on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool coin() { return next() & 1; }

  private:
    std::uint64_t state_;
};

/// Erdos-Renyi signed graph: each pair becomes an edge with probability 1/2,
/// each edge sign is an independent fair coin.
inline SignedGraph random_signed_graph(SplitMix64& rng, int order) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (rng.coin()) edges.push_back({u, v, rng.coin() ? 1 : -1});
    return SignedGraph(order, std::move(edges));
}

}  // namespace sgi
