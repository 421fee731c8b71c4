#include "sgi/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace sgi {

namespace {

using AdjRows = std::array<std::uint8_t, kEnumerationCap>;

// Key packing: placing vertices into slots 0..n-1, slot k contributes a block
// of k bits giving its adjacency to slots 0..k-1 (slot 0 as the most
// significant bit of the block); blocks concatenate most-significant-first.
// n*(n-1)/2 <= 28 bits, so a 64-bit key is comfortable.
std::uint64_t key_for_order(int n, const AdjRows& rows, const std::array<int, kEnumerationCap>& perm) {
    std::uint64_t key = 0;
    for (int k = 1; k < n; ++k) {
        std::uint64_t block = 0;
        for (int i = 0; i < k; ++i) block = block << 1 | ((rows[perm[k]] >> perm[i]) & 1u);
        key = key << k | block;
    }
    return key;
}

struct CanonicalSearch {
    int n;
    const AdjRows& rows;
    int total_bits;
    std::uint64_t best;
    std::array<int, kEnumerationCap> placed{};
    std::uint8_t used = 0;

    CanonicalSearch(int n_, const AdjRows& rows_) : n(n_), rows(rows_), total_bits(n_ * (n_ - 1) / 2) {
        // Seed with a low-degree-first labeling; a tight initial bound makes
        // the prefix pruning effective.
        std::array<int, kEnumerationCap> perm{};
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::sort(perm.begin(), perm.begin() + n, [&](int a, int b) {
            int da = std::popcount(static_cast<unsigned>(rows[a]));
            int db = std::popcount(static_cast<unsigned>(rows[b]));
            return da != db ? da < db : a < b;
        });
        best = key_for_order(n, rows, perm);
        descend(0, 0, 0);
    }

    void descend(int depth, std::uint64_t partial, int bits) {
        if (depth == n) {
            best = partial;  // partial <= every prefix of best at this point
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            std::uint64_t block = 0;
            for (int i = 0; i < depth; ++i) block = block << 1 | ((rows[v] >> placed[i]) & 1u);
            const std::uint64_t cand = partial << depth | block;
            const int bits2 = bits + depth;
            if (cand > (best >> (total_bits - bits2))) continue;
            placed[depth] = v;
            used |= 1u << v;
            descend(depth + 1, cand, bits2);
            used &= ~(1u << v);
        }
    }
};

std::uint64_t canonical_key_rows(int n, const AdjRows& rows) {
    if (n <= 1) return 0;
    return CanonicalSearch(n, rows).best;
}

AdjRows decode_key(int n, std::uint64_t key) {
    AdjRows rows{};
    for (int k = n - 1; k >= 1; --k) {
        std::uint64_t block = key & ((1u << k) - 1);
        key >>= k;
        for (int i = 0; i < k; ++i)
            if (block >> (k - 1 - i) & 1) {
                rows[i] |= static_cast<std::uint8_t>(1u << k);
                rows[k] |= static_cast<std::uint8_t>(1u << i);
            }
    }
    return rows;
}

SignedGraph rows_to_graph(int n, const AdjRows& rows) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rows[u] >> v & 1) edges.push_back({u, v, 1});
    return SignedGraph(n, std::move(edges));
}

bool rows_connected(int n, const AdjRows& rows) {
    if (n == 0) return true;
    std::uint8_t seen = 1;
    std::uint8_t frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= rows[v];
        frontier = next & static_cast<std::uint8_t>(~seen);
        seen |= next;
    }
    return std::popcount(static_cast<unsigned>(seen)) == n;
}

}  // namespace

std::uint64_t canonical_key(const SignedGraph& g) {
    if (g.order() > kEnumerationCap)
        throw std::invalid_argument("canonical_key: order exceeds the enumeration cap of " +
                                    std::to_string(kEnumerationCap));
    AdjRows rows{};
    for (const auto& e : g.edges()) {
        rows[e.u] |= static_cast<std::uint8_t>(1u << e.v);
        rows[e.v] |= static_cast<std::uint8_t>(1u << e.u);
    }
    return canonical_key_rows(g.order(), rows);
}

std::vector<SignedGraph> enumerate_underlying_graphs(int n, bool connected_only) {
    if (n < 1 || n > kEnumerationCap)
        throw std::invalid_argument("enumerate_underlying_graphs: n must lie in 1.." +
                                    std::to_string(kEnumerationCap) +
                                    "; larger orders are beyond the exhaustive cap");
    std::vector<std::uint64_t> keys{0};  // the single graph on one vertex
    for (int t = 2; t <= n; ++t) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> next;
        for (std::uint64_t key : keys) {
            const AdjRows base = decode_key(t - 1, key);
            for (std::uint32_t subset = 0; subset < (1u << (t - 1)); ++subset) {
                AdjRows rows = base;
                rows[t - 1] = static_cast<std::uint8_t>(subset);
                for (int i = 0; i < t - 1; ++i)
                    if (subset >> i & 1) rows[i] |= static_cast<std::uint8_t>(1u << (t - 1));
                const std::uint64_t k2 = canonical_key_rows(t, rows);
                if (seen.insert(k2).second) next.push_back(k2);
            }
        }
        keys = std::move(next);
    }
    std::sort(keys.begin(), keys.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<SignedGraph> out;
    for (std::uint64_t key : keys) {
        const AdjRows rows = decode_key(n, key);
        if (connected_only && !rows_connected(n, rows)) continue;
        out.push_back(rows_to_graph(n, rows));
    }
    return out;
}

void for_each_signature_representative(const SignedGraph& g,
                                       const std::function<bool(const SignedGraph&)>& fn) {
    // BFS spanning forest; forest edges stay +.
    const int n = g.order();
    std::vector<int> parent(n, -1);
    std::vector<char> visited(n, 0);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        queue.assign(1, root);
        std::size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            for (int w : g.neighbors(u)) {
                if (visited[w]) continue;
                visited[w] = 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> loose;  // indices of non-forest edges, ascending
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (parent[edges[i].u] != edges[i].v && parent[edges[i].v] != edges[i].u) loose.push_back(i);
    const int theta = static_cast<int>(loose.size());
    if (theta >= 63)
        throw std::invalid_argument("signature representatives: 2^" + std::to_string(theta) +
                                    " patterns cannot be streamed");

    std::vector<SignedEdge> work = edges;
    for (auto& e : work) e.sign = 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << theta); ++mask) {
        for (int b = 0; b < theta; ++b) work[loose[b]].sign = (mask >> b & 1) ? -1 : 1;
        if (!fn(SignedGraph(n, work))) return;
    }
}

std::vector<SignedGraph> signature_representatives(const SignedGraph& g) {
    std::vector<SignedGraph> out;
    for_each_signature_representative(g, [&](const SignedGraph& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace sgi
