#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgi/signed_graph.hpp"

namespace sgi {

/// One concrete cycle of a host graph: the cyclic vertex sequence plus the
/// product of its edge signs.
struct CycleWitness {
    std::vector<int> vertices;  // length >= 3, consecutive entries adjacent
    int sign = 1;

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Thrown when an operation is asked for a graph shape it does not support
/// (e.g. contracting a graph whose cycles share vertices).
class UnsupportedStructureError : public std::runtime_error {
  public:
    explicit UnsupportedStructureError(const std::string& message) : std::runtime_error(message) {}
};

/// Product of edge signs along a cyclic vertex sequence; the sequence must be
/// a genuine cycle of g (length >= 3, distinct vertices, consecutive entries
/// adjacent including the wrap-around) or std::invalid_argument is thrown.
int cycle_sign(const SignedGraph& g, std::span<const int> cycle);

/// True iff every cycle has sign +1. Decided by a spanning-forest +-1 vertex
/// potential sweep: an edge uv is consistent when sign(uv) = pot(u) * pot(v).
/// Forests are balanced.
bool is_balanced(const SignedGraph& g);

/// Signs of edges with exactly one endpoint in `verts` are negated.
SignedGraph switched(const SignedGraph& g, std::span<const int> verts);

/// Every edge sign negated.
SignedGraph negated(const SignedGraph& g);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // maximal 2-connected blocks and bridges; each ascending
    std::vector<int> cut_vertices;         // ascending
};

BlockDecomposition block_decomposition(const SignedGraph& g);

/// True iff no two distinct cycles of g share a vertex: every block carries at
/// most one independent cycle and no vertex lies on two cycle blocks.
bool is_cycle_disjoint(const SignedGraph& g);

/// Witnesses of the fundamental cycles of a BFS spanning forest, one per
/// non-forest edge, in edge order. All of them are positive iff g is balanced.
std::vector<CycleWitness> fundamental_cycles(const SignedGraph& g);

struct ContractionTreeNode {
    int host_vertex = -1;               // >= 0 for nodes that are plain vertices
    std::optional<CycleWitness> cycle;  // set for contracted-cycle nodes

    bool is_cycle() const { return cycle.has_value(); }
};

/// The tree obtained from a connected cycle-disjoint graph by collapsing each
/// cycle to a single node. Nodes are ordered by their smallest host vertex.
struct ContractionTree {
    std::vector<ContractionTreeNode> nodes;
    std::vector<std::pair<int, int>> edges;  // node-id pairs, first < second, sorted
    std::vector<int> vertex_to_node;         // host vertex -> node id
};

/// Requires g connected (std::invalid_argument) and cycle-disjoint
/// (UnsupportedStructureError). The result always satisfies the tree
/// invariants |edges| = |nodes| - 1 and connectivity.
ContractionTree contraction_tree(const SignedGraph& g);

}  // namespace sgi
