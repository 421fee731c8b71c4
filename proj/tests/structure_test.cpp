#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "sgi/families.hpp"
#include "sgi/inertia.hpp"
#include "sgi/random.hpp"
#include "sgi/structure.hpp"
#include "test_util.hpp"

using namespace sgi;

TEST_CASE("cycle sign") {
    SignedGraph c3(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    CHECK(cycle_sign(c3, std::vector<int>{0, 1, 2}) == 1);
    SignedGraph c3neg(3, {{0, 1, 1}, {1, 2, -1}, {0, 2, 1}});
    CHECK(cycle_sign(c3neg, std::vector<int>{0, 1, 2}) == -1);
    SignedGraph c4(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, -1}, {0, 3, 1}});
    CHECK(cycle_sign(c4, std::vector<int>{0, 1, 2, 3}) == 1);

    CHECK_THROWS_AS(cycle_sign(c4, std::vector<int>{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_sign(c4, std::vector<int>{0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_sign(c4, std::vector<int>{0, 1, 3}), std::invalid_argument);  // 1-3 missing
}

TEST_CASE("balance") {
    SplitMix64 rng(31);
    // all-positive graphs are balanced
    for (int trial = 0; trial < 20; ++trial) {
        SignedGraph g = random_signed_graph(rng, 1 + static_cast<int>(rng.below(8)));
        std::vector<SignedEdge> pos = g.edges();
        for (auto& e : pos) e.sign = 1;
        CHECK(is_balanced(SignedGraph(g.order(), pos)));
    }
    // any forest with any signs is balanced
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        std::vector<SignedEdge> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(rng.below(v)), v, rng.coin() ? 1 : -1});
        CHECK(is_balanced(SignedGraph(n, edges)));
    }
    SignedGraph c5(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, -1}, {0, 4, 1}});
    CHECK_FALSE(is_balanced(c5));
    CHECK(is_balanced(SignedGraph(0)));
}

TEST_CASE("balance agrees with the cycle-basis signs") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        SignedGraph g = random_signed_graph(rng, static_cast<int>(rng.below(9)));
        bool all_positive = true;
        for (const auto& w : fundamental_cycles(g))
            if (w.sign != 1) all_positive = false;
        CHECK(is_balanced(g) == all_positive);
    }
}

TEST_CASE("switching") {
    SignedGraph e(2, {{0, 1, 1}});
    CHECK(switched(e, std::vector<int>{}) == e);
    CHECK(switched(e, std::vector<int>{0, 1}) == e);
    CHECK(switched(e, std::vector<int>{0}) == SignedGraph(2, {{0, 1, -1}}));

    SplitMix64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        SignedGraph g = random_signed_graph(rng, n);
        std::vector<int> u;
        for (int v = 0; v < n; ++v)
            if (rng.coin()) u.push_back(v);
        SignedGraph s = switched(g, u);
        CHECK(graph_inertia(s) == graph_inertia(g));
        CHECK(is_balanced(s) == is_balanced(g));
    }
}

TEST_CASE("negation") {
    SignedGraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    SignedGraph nc4 = negated(c4);
    for (const auto& e : nc4.edges()) CHECK(e.sign == -1);
    CHECK(is_balanced(nc4));  // even cycle keeps balance
    CHECK(negated(nc4) == c4);

    SignedGraph c3(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    CHECK_FALSE(is_balanced(negated(c3)));  // odd cycle flips balance

    SplitMix64 rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        SignedGraph g = random_signed_graph(rng, static_cast<int>(rng.below(9)));
        const Inertia in = graph_inertia(g);
        const Inertia swapped = graph_inertia(negated(g));
        CHECK(swapped == Inertia{in.negative, in.positive, in.zero});
        CHECK(negated(negated(g)) == g);
    }
}

TEST_CASE("block decomposition") {
    auto bd = block_decomposition(test::bowtie());
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == std::vector<int>{0, 1, 2});
    CHECK(bd.blocks[1] == std::vector<int>{0, 3, 4});
    CHECK(bd.cut_vertices == std::vector<int>{0});

    SignedGraph p4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    auto tree_bd = block_decomposition(p4);
    CHECK(tree_bd.blocks.size() == 3);
    for (const auto& b : tree_bd.blocks) CHECK(b.size() == 2);
    CHECK(tree_bd.cut_vertices == std::vector<int>{1, 2});

    SignedGraph c6(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {0, 5, 1}});
    auto c6_bd = block_decomposition(c6);
    REQUIRE(c6_bd.blocks.size() == 1);
    CHECK(c6_bd.blocks[0].size() == 6);
    CHECK(c6_bd.cut_vertices.empty());

    CHECK(block_decomposition(SignedGraph(3)).blocks.empty());
}

TEST_CASE("cycle disjointness") {
    CHECK_FALSE(is_cycle_disjoint(test::bowtie()));  // two triangles meet at the cut vertex
    SignedGraph unicyclic(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}});
    CHECK(is_cycle_disjoint(unicyclic));
    SignedGraph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK_FALSE(is_cycle_disjoint(k4));
    CHECK(is_cycle_disjoint(test::star3()));
    CHECK(is_cycle_disjoint(SignedGraph(0)));
    // two triangles joined by a bridge: vertex-disjoint cycles
    SignedGraph two_tri(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
    CHECK(is_cycle_disjoint(two_tri));
    // the count of cycle blocks equals theta on cycle-disjoint graphs
    CHECK(cyclomatic_number(two_tri) == 2);
}

TEST_CASE("contraction tree") {
    SignedGraph c5(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
    auto single = contraction_tree(c5);
    CHECK(single.nodes.size() == 1);
    CHECK(single.edges.empty());
    REQUIRE(single.nodes[0].is_cycle());
    CHECK(single.nodes[0].cycle->vertices.size() == 5);
    CHECK(single.nodes[0].cycle->sign == 1);

    SignedGraph two_tri(6, {{0, 1, 1}, {1, 2, -1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
    auto pair = contraction_tree(two_tri);
    REQUIRE(pair.nodes.size() == 2);
    CHECK(pair.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(pair.nodes[0].cycle->sign == -1);
    CHECK(pair.nodes[1].cycle->sign == 1);

    // triangle with a pendant path of two edges: cycle node - v3 - v4
    SignedGraph tadpole(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
    auto path3 = contraction_tree(tadpole);
    REQUIRE(path3.nodes.size() == 3);
    CHECK(path3.nodes[0].is_cycle());
    CHECK(path3.nodes[1].host_vertex == 3);
    CHECK(path3.nodes[2].host_vertex == 4);
    CHECK(path3.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(path3.vertex_to_node == std::vector<int>{0, 0, 0, 1, 2});

    CHECK_THROWS_AS(contraction_tree(test::bowtie()), UnsupportedStructureError);
    CHECK_THROWS_AS(contraction_tree(SignedGraph(3, {{0, 1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(contraction_tree(SignedGraph(0)), std::invalid_argument);
}

TEST_CASE("contraction tree is a tree on random cactus-like graphs") {
    // grow cycle-disjoint graphs: attach pendant vertices or whole cycles
    SplitMix64 rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<SignedEdge> edges;
        int n = 1;
        const int steps = 1 + static_cast<int>(rng.below(4));
        for (int s = 0; s < steps; ++s) {
            const int attach = static_cast<int>(rng.below(n));
            if (rng.coin()) {
                edges.push_back({attach, n, rng.coin() ? 1 : -1});
                n += 1;
            } else {
                const int len = 3 + static_cast<int>(rng.below(3));
                // a fresh cycle through `attach` and len-1 new vertices
                int prev = attach;
                for (int k = 0; k < len - 1; ++k) {
                    edges.push_back({prev, n, rng.coin() ? 1 : -1});
                    prev = n++;
                }
                edges.push_back({attach, prev, rng.coin() ? 1 : -1});
            }
        }
        SignedGraph g(n, edges);
        if (!is_cycle_disjoint(g)) continue;  // cycles may collide at the attach vertex
        auto tree = contraction_tree(g);
        CHECK(tree.edges.size() + 1 == tree.nodes.size());
        int cycle_nodes = 0;
        for (const auto& node : tree.nodes) cycle_nodes += node.is_cycle();
        CHECK(cycle_nodes == cyclomatic_number(g));
    }
}
