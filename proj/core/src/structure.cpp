#include "sgi/structure.hpp"

#include <algorithm>
#include <set>

namespace sgi {

int cycle_sign(const SignedGraph& g, std::span<const int> cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3) throw std::invalid_argument("cycle_sign: a cycle has at least 3 vertices");
    std::vector<char> seen(g.order(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("cycle_sign: vertex out of range");
        if (seen[v]) throw std::invalid_argument("cycle_sign: repeated vertex " + std::to_string(v));
        seen[v] = 1;
    }
    int sign = 1;
    for (int i = 0; i < len; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % len];
        if (!g.has_edge(u, v))
            throw std::invalid_argument("cycle_sign: " + std::to_string(u) + "-" + std::to_string(v) +
                                        " is not an edge");
        sign *= g.sign_of(u, v);
    }
    return sign;
}

bool is_balanced(const SignedGraph& g) {
    std::vector<int> potential(g.order(), 0);
    std::vector<int> queue;
    for (int root = 0; root < g.order(); ++root) {
        if (potential[root] != 0) continue;
        potential[root] = 1;
        queue.assign(1, root);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int w : g.neighbors(u)) {
                int want = potential[u] * g.sign_of(u, w);
                if (potential[w] == 0) {
                    potential[w] = want;
                    queue.push_back(w);
                } else if (potential[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

SignedGraph switched(const SignedGraph& g, std::span<const int> verts) {
    std::vector<char> in_set(g.order(), 0);
    for (int v : verts) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("switched: vertex out of range");
        in_set[v] = 1;
    }
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges)
        if (in_set[e.u] != in_set[e.v]) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(edges));
}

SignedGraph negated(const SignedGraph& g) {
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(edges));
}

BlockDecomposition block_decomposition(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    struct Frame {
        int v;
        std::size_t next;  // index into neighbors(v)
    };
    std::vector<Frame> frames;

    auto pop_block = [&](int u, int v) {
        std::vector<int> verts;
        while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == v) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.blocks.push_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        int root_children = 0;
        disc[root] = low[root] = timer++;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == parent[f.v]) continue;
                if (disc[w] == -1) {
                    parent[w] = f.v;
                    if (f.v == root) ++root_children;
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                int u = parent[v];
                if (u == -1) continue;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    pop_block(u, v);
                    if (u != root) is_cut[u] = 1;
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

namespace {

int edges_inside(const SignedGraph& g, const std::vector<int>& block) {
    int count = 0;
    for (int v : block)
        for (int w : g.neighbors(v))
            if (w > v && std::binary_search(block.begin(), block.end(), w)) ++count;
    return count;
}

// The cyclic vertex order of a block that is exactly one cycle, starting at
// its smallest vertex and moving toward its smallest neighbor.
CycleWitness walk_cycle_block(const SignedGraph& g, const std::vector<int>& block) {
    CycleWitness witness;
    int start = block.front();
    int prev = -1, cur = start;
    do {
        witness.vertices.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (w == prev || !std::binary_search(block.begin(), block.end(), w)) continue;
            next = w;
            break;
        }
        prev = cur;
        cur = next;
    } while (cur != start);
    witness.sign = cycle_sign(g, witness.vertices);
    return witness;
}

}  // namespace

bool is_cycle_disjoint(const SignedGraph& g) {
    auto bd = block_decomposition(g);
    std::vector<int> cycle_blocks_at(g.order(), 0);
    for (const auto& block : bd.blocks) {
        const int e = edges_inside(g, block);
        const int v = static_cast<int>(block.size());
        if (e > v) return false;  // a block with two independent cycles
        if (e == v)
            for (int x : block)
                if (++cycle_blocks_at[x] > 1) return false;  // two cycles meeting at x
    }
    return true;
}

std::vector<CycleWitness> fundamental_cycles(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> parent(n, -1), depth(n, 0);
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
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<CycleWitness> cycles;
    for (const auto& e : g.edges()) {
        if (parent[e.u] == e.v || parent[e.v] == e.u) continue;  // forest edge
        int a = e.u, b = e.v;
        std::vector<int> up_a{a}, up_b{b};
        while (depth[a] > depth[b]) up_a.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_b.push_back(b = parent[b]);
        while (a != b) {
            up_a.push_back(a = parent[a]);
            up_b.push_back(b = parent[b]);
        }
        // up_a ends at the meeting vertex; append the b-side path downward,
        // omitting the meeting vertex itself.
        CycleWitness w;
        w.vertices = std::move(up_a);
        for (auto it = up_b.rbegin() + 1; it != up_b.rend(); ++it) w.vertices.push_back(*it);
        w.sign = cycle_sign(g, w.vertices);
        cycles.push_back(std::move(w));
    }
    return cycles;
}

ContractionTree contraction_tree(const SignedGraph& g) {
    if (g.order() == 0 || connected_components(g).size() != 1)
        throw std::invalid_argument("contraction_tree: connected graph required");
    auto bd = block_decomposition(g);
    std::vector<const std::vector<int>*> cycle_block_of(g.order(), nullptr);
    for (const auto& block : bd.blocks) {
        const int e = edges_inside(g, block);
        if (e > static_cast<int>(block.size()))
            throw UnsupportedStructureError("contraction_tree: a block carries two or more cycles");
        if (e == static_cast<int>(block.size()))
            for (int v : block) {
                if (cycle_block_of[v])
                    throw UnsupportedStructureError("contraction_tree: two cycles share vertex " +
                                                    std::to_string(v));
                cycle_block_of[v] = &block;
            }
    }

    ContractionTree tree;
    tree.vertex_to_node.assign(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (tree.vertex_to_node[v] >= 0) continue;
        ContractionTreeNode node;
        const int id = static_cast<int>(tree.nodes.size());
        if (cycle_block_of[v]) {
            node.cycle = walk_cycle_block(g, *cycle_block_of[v]);
            for (int x : *cycle_block_of[v]) tree.vertex_to_node[x] = id;
        } else {
            node.host_vertex = v;
            tree.vertex_to_node[v] = id;
        }
        tree.nodes.push_back(std::move(node));
    }

    std::set<std::pair<int, int>> tree_edges;
    for (const auto& e : g.edges()) {
        int a = tree.vertex_to_node[e.u], b = tree.vertex_to_node[e.v];
        if (a != b) tree_edges.insert({std::min(a, b), std::max(a, b)});
    }
    tree.edges.assign(tree_edges.begin(), tree_edges.end());

    // Contract of the construction: the result is a tree.
    if (static_cast<int>(tree.edges.size()) != static_cast<int>(tree.nodes.size()) - 1)
        throw std::logic_error("contraction_tree: edge count does not match a tree");
    std::vector<std::vector<int>> adj(tree.nodes.size());
    for (auto [a, b] : tree.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(tree.nodes.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (reached != static_cast<int>(tree.nodes.size()))
        throw std::logic_error("contraction_tree: disconnected result");
    return tree;
}

}  // namespace sgi
