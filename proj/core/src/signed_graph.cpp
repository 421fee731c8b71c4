#include "sgi/signed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgi {

SignedGraph::SignedGraph(int order) : SignedGraph(order, {}) {}

SignedGraph::SignedGraph(int order, std::vector<SignedEdge> edges) {
    if (order < 0) throw std::invalid_argument("SignedGraph: negative order");
    order_ = order;
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("SignedGraph: self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
            throw std::invalid_argument("SignedGraph: edge endpoint out of range");
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("SignedGraph: edge sign must be +1 or -1");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::invalid_argument("SignedGraph: duplicate edge " + std::to_string(edges[i].u) + "-" +
                                        std::to_string(edges[i].v));
    edges_ = std::move(edges);

    std::vector<int> deg(order_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    adj_offset_.assign(order_ + 1, 0);
    for (int v = 0; v < order_; ++v) adj_offset_[v + 1] = adj_offset_[v] + deg[v];
    neighbor_.resize(adj_offset_[order_]);
    neighbor_sign_.resize(adj_offset_[order_]);
    std::vector<int> fill(adj_offset_.begin(), adj_offset_.end() - 1);
    for (const auto& e : edges_) {
        neighbor_[fill[e.u]] = e.v;
        neighbor_sign_[fill[e.u]++] = e.sign;
        neighbor_[fill[e.v]] = e.u;
        neighbor_sign_[fill[e.v]++] = e.sign;
    }
    // edges_ is sorted, so each vertex's neighbor run is already ascending for
    // the u-side entries; the v-side entries interleave and need one sort.
    for (int v = 0; v < order_; ++v) {
        int lo = adj_offset_[v], hi = adj_offset_[v + 1];
        std::vector<std::pair<int, int>> tmp;
        tmp.reserve(hi - lo);
        for (int i = lo; i < hi; ++i) tmp.emplace_back(neighbor_[i], neighbor_sign_[i]);
        std::sort(tmp.begin(), tmp.end());
        for (int i = lo; i < hi; ++i) {
            neighbor_[i] = tmp[i - lo].first;
            neighbor_sign_[i] = tmp[i - lo].second;
        }
    }
}

void SignedGraph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::invalid_argument("SignedGraph: vertex index " + std::to_string(v) + " out of range");
}

bool SignedGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int SignedGraph::sign_of(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        throw std::invalid_argument("SignedGraph: no edge " + std::to_string(u) + "-" + std::to_string(v));
    return neighbor_sign_[adj_offset_[u] + static_cast<int>(it - nb.begin())];
}

int SignedGraph::degree(int v) const {
    check_vertex(v);
    return adj_offset_[v + 1] - adj_offset_[v];
}

std::span<const int> SignedGraph::neighbors(int v) const {
    check_vertex(v);
    return {neighbor_.data() + adj_offset_[v], static_cast<std::size_t>(adj_offset_[v + 1] - adj_offset_[v])};
}

int pendant_count(const SignedGraph& g) {
    int p = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) ++p;
    return p;
}

std::vector<std::vector<int>> connected_components(const SignedGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;  // ordered by smallest member since roots scan ascending
}

int cyclomatic_number(const SignedGraph& g) {
    return g.edge_count() - g.order() + static_cast<int>(connected_components(g).size());
}

DeletionResult delete_vertices(const SignedGraph& g, std::span<const int> verts) {
    std::vector<char> drop(g.order(), 0);
    for (int v : verts) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertices: vertex out of range");
        drop[v] = 1;
    }
    std::vector<int> old_to_new(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!drop[v]) old_to_new[v] = next++;
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges())
        if (!drop[e.u] && !drop[e.v]) edges.push_back({old_to_new[e.u], old_to_new[e.v], e.sign});
    return {SignedGraph(next, std::move(edges)), std::move(old_to_new)};
}

SignedGraph induced_subgraph(const SignedGraph& g, std::span<const int> keep) {
    std::vector<char> keep_mask(g.order(), 0);
    for (int v : keep) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        keep_mask[v] = 1;
    }
    std::vector<int> complement;
    for (int v = 0; v < g.order(); ++v)
        if (!keep_mask[v]) complement.push_back(v);
    return delete_vertices(g, complement).graph;
}

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
    std::vector<SignedEdge> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order(), e.sign});
    return SignedGraph(a.order() + b.order(), std::move(edges));
}

VertexLocalStats vertex_local_stats(const SignedGraph& g, int x) {
    if (g.order() < 2) throw std::invalid_argument("vertex_local_stats: order >= 2 required");
    if (x < 0 || x >= g.order()) throw std::invalid_argument("vertex_local_stats: vertex out of range");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("vertex_local_stats: graph must be connected");

    VertexLocalStats stats;
    stats.vertex = x;
    stats.degree = g.degree(x);

    auto del = delete_vertices(g, std::vector<int>{x});
    auto comps = connected_components(del.graph);
    stats.components_after_deletion = static_cast<int>(comps.size());

    // component id per surviving vertex, in deleted indexing
    std::vector<int> comp_of(del.graph.order(), -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int v : comps[c]) comp_of[v] = c;

    std::vector<char> comp_has_two_degree(comps.size(), 0);
    for (int y : g.neighbors(x)) {
        if (g.degree(y) != 2) continue;
        ++stats.two_degree_neighbors;
        comp_has_two_degree[comp_of[del.old_to_new[y]]] = 1;
    }
    for (char flag : comp_has_two_degree) stats.components_with_two_degree_neighbors += flag;
    return stats;
}

}  // namespace sgi
