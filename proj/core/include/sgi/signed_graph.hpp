#pragma once

#include <span>
#include <vector>

namespace sgi {

struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;  // +1 or -1

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple undirected graph with a +1/-1 sign on every edge. Vertices are the
/// dense indices 0..order-1. Instances are immutable after construction; every
/// operation in this library is a pure function returning fresh values, so
/// graphs can be shared freely across threads.
class SignedGraph {
  public:
    SignedGraph() = default;
    explicit SignedGraph(int order);
    /// Edges may arrive in any order and orientation; they are normalized to
    /// u < v and sorted. Self-loops, duplicate pairs, out-of-range endpoints
    /// and signs outside {+1,-1} are rejected with std::invalid_argument.
    SignedGraph(int order, std::vector<SignedEdge> edges);

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int sign_of(int u, int v) const;  // throws std::invalid_argument if absent
    int degree(int v) const;
    std::span<const int> neighbors(int v) const;  // ascending vertex order

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

  private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::vector<SignedEdge> edges_;  // normalized u < v, sorted by (u, v)
    std::vector<int> adj_offset_;    // CSR offsets into neighbor_/neighbor_sign_
    std::vector<int> neighbor_;
    std::vector<int> neighbor_sign_;
};

/// Quantities around one vertex x of a connected graph: its degree d, the
/// component count s of g - x, the number m of neighbors of x having degree 2
/// in g, and the number r of components of g - x containing such neighbors.
/// They satisfy d >= m + s - r and theta(g - x) = theta(g) - d + s.
struct VertexLocalStats {
    int vertex = 0;
    int degree = 0;
    int components_after_deletion = 0;             // s
    int two_degree_neighbors = 0;                  // m
    int components_with_two_degree_neighbors = 0;  // r
};

struct DeletionResult {
    SignedGraph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
};

int pendant_count(const SignedGraph& g);

/// Maximal connected vertex sets, each ascending, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const SignedGraph& g);

/// |E| - |V| + c; the dimension of the cycle space.
int cyclomatic_number(const SignedGraph& g);

/// Induced subgraph on the complement of `verts`, re-indexed contiguously.
/// Signs are preserved. Deleting everything yields the empty graph.
DeletionResult delete_vertices(const SignedGraph& g, std::span<const int> verts);

/// Induced subgraph on `keep`, re-indexed contiguously in ascending order.
SignedGraph induced_subgraph(const SignedGraph& g, std::span<const int> keep);

/// Disjoint union; vertices of `b` are shifted up by a.order().
SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b);

/// Requires g connected with order >= 2.
VertexLocalStats vertex_local_stats(const SignedGraph& g, int x);

}  // namespace sgi
