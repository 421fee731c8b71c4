#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "sgi/checks.hpp"
#include "sgi/enumerate.hpp"
#include "sgi/families.hpp"
#include "sgi/random.hpp"
#include "sgi/sg_format.hpp"
#include "sgi/structure.hpp"
#include "sgi/suite.hpp"
#include "test_util.hpp"

using namespace sgi;

TEST_CASE("enumeration reproduces the known census") {
    const long all_counts[] = {1, 2, 4, 11, 34, 156};
    const long connected_counts[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_underlying_graphs(n, false).size() == all_counts[n - 1]);
        CHECK(enumerate_underlying_graphs(n, true).size() == connected_counts[n - 1]);
    }
    CHECK(enumerate_underlying_graphs(7, true).size() == 853);
    CHECK_THROWS_AS(enumerate_underlying_graphs(0, false), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_underlying_graphs(9, false), std::invalid_argument);
}

TEST_CASE("enumeration is deterministic and canonically labeled") {
    const auto a = enumerate_underlying_graphs(5, true);
    const auto b = enumerate_underlying_graphs(5, true);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    // sorted by edge count
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].edge_count() <= a[i].edge_count());
}

TEST_CASE("canonical key is an isomorphism invariant") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        SignedGraph g = random_signed_graph(rng, n);
        // random relabeling
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<SignedEdge> edges;
        for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
        CHECK(canonical_key(g) == canonical_key(SignedGraph(n, edges)));
    }
    CHECK(canonical_key(make_path(4)) != canonical_key(test::star3()));
}

TEST_CASE("signature representatives") {
    CHECK(signature_representatives(test::star3()).size() == 1);
    CHECK(signature_representatives(make_cycle({5, true})).size() == 2);
    CHECK(signature_representatives(test::bowtie()).size() == 4);

    // C5: one balanced and one unbalanced representative
    auto reps = signature_representatives(make_cycle({5, true}));
    CHECK(is_balanced(reps[0]));
    CHECK_FALSE(is_balanced(reps[1]));

    // early stop
    int seen = 0;
    for_each_signature_representative(test::bowtie(), [&](const SignedGraph&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("representatives cover every signature up to switching") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(6));
        SignedGraph g = random_signed_graph(rng, n);
        // reduce g's signature to the forest-positive one by switching: walk a
        // BFS forest, forcing every tree edge positive
        std::vector<int> potential(n, 0);
        std::vector<int> order;
        for (int root = 0; root < n; ++root) {
            if (potential[root] != 0) continue;
            potential[root] = 1;
            order.assign(1, root);
            std::size_t head = 0;
            while (head < order.size()) {
                int u = order[head++];
                for (int w : g.neighbors(u)) {
                    if (potential[w] != 0) continue;
                    potential[w] = potential[u] * g.sign_of(u, w);
                    order.push_back(w);
                }
            }
        }
        std::vector<int> flip;
        for (int v = 0; v < n; ++v)
            if (potential[v] < 0) flip.push_back(v);
        const SignedGraph reduced = switched(g, flip);

        bool found = false;
        for_each_signature_representative(g, [&](const SignedGraph& rep) {
            if (rep == reduced) found = true;
            return !found;
        });
        CHECK(found);
        CHECK(graph_inertia(reduced) == graph_inertia(g));
    }
}

TEST_CASE("check_bounds on named graphs") {
    // single edge: weak bound 0, strict bound 1/2 applies because p >= 1
    auto p2 = check_bounds(make_path(2));
    CHECK(p2.weak_bound == 0);
    CHECK(p2.strict_applicable);
    CHECK(p2.strict_bound == Rational(1, 2));
    CHECK(p2.bounds_ok());
    CHECK_FALSE(p2.equality_positive());
    CHECK(p2.judged);

    auto c4 = check_bounds(make_cycle({4, true}));
    CHECK(c4.weak_bound == 1);
    CHECK_FALSE(c4.strict_applicable);
    CHECK(c4.equality_positive());
    CHECK(c4.equality_negative());
    CHECK(c4.equality_nullity());
    CHECK(c4.extremal_verdict);
    CHECK(c4.all_ok());

    auto bt = check_bounds(test::bowtie());
    CHECK(bt.theta == 2);
    CHECK(bt.pendants == 0);
    CHECK_FALSE(bt.cycle_disjoint);
    CHECK(bt.strict_applicable);  // two triangles share the cut vertex
    CHECK(bt.strict_bound == 1);
    CHECK(bt.inertia == Inertia{2, 3, 0});
    CHECK(bt.all_ok());

    auto lonely = check_bounds(disjoint_union(make_path(2), SignedGraph(1)));
    CHECK_FALSE(lonely.judged);

    CHECK_THROWS_AS(check_bounds(SignedGraph(0)), std::invalid_argument);
}

TEST_CASE("machine records are deterministic") {
    const auto r = check_bounds(test::bowtie(-1, 1));
    CHECK(machine_record(r) == machine_record(check_bounds(test::bowtie(-1, 1))));
    CHECK(machine_record(r).find("sg=5,6;") == 0);
}

TEST_CASE("deletion lemmas on named graphs") {
    CHECK(check_deletion_lemmas(make_path(4)).pass);
    CHECK(check_deletion_lemmas(make_cycle({5, false})).pass);
    CHECK(check_deletion_lemmas(test::bowtie(1, -1)).pass);

    const SignedGraph two_c3 = disjoint_union(make_cycle({3, true}), make_cycle({3, true}));
    CHECK(graph_inertia(two_c3) == Inertia{2, 4, 0});
    CHECK(check_deletion_lemmas(two_c3).pass);

    // P4 pendant step: (2,2,0) = (1,1,0) + the deleted pair's (1,1,0)
    const SignedGraph p4 = make_path(4);
    CHECK(graph_inertia(p4) == Inertia{2, 2, 0});
    CHECK(graph_inertia(delete_vertices(p4, std::vector<int>{0, 1}).graph) == Inertia{1, 1, 0});

    SplitMix64 rng(43);
    for (int trial = 0; trial < 25; ++trial)
        CHECK(check_deletion_lemmas(random_signed_graph(rng, 1 + static_cast<int>(rng.below(7)))).pass);
}

TEST_CASE("interlacing monotonicity") {
    auto a = adjacency_matrix(make_cycle({4, true}));
    CHECK(check_interlacing(a, std::vector<int>{0, 1, 2, 3}));
    CHECK(check_interlacing(a, std::vector<int>{0, 1, 2}));
    SplitMix64 rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        SignedGraph g = random_signed_graph(rng, n);
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (rng.coin()) keep.push_back(v);
        CHECK(check_interlacing(adjacency_matrix(g), keep));
    }
}

TEST_CASE("suite at max_n 4: no violations, one extremal graph") {
    SuiteOptions options;
    options.collect_equality_examples = true;
    const SuiteSummary s = run_suite(4, options);
    CHECK(s.pass());
    CHECK(s.skeletons_checked == 9);  // 1 + 2 + 6 connected skeletons
    CHECK(s.signatures_checked == 22);
    CHECK(s.census_positive.equal_and_extremal == 1);
    CHECK(s.census_positive.equal_not_extremal == 0);
    CHECK(s.census_positive.extremal_not_equal == 0);
    CHECK(s.census_negative.equal_and_extremal == 1);
    CHECK(s.census_nullity.equal_and_extremal == 1);
    REQUIRE(s.equality_examples.size() == 1);
    const SignedGraph& extremal = s.equality_examples[0].graph;
    CHECK(canonical_key(extremal) == canonical_key(make_cycle({4, true})));
    CHECK(is_balanced(extremal));
}

TEST_CASE("suite at max_n 6: the two expected equality graphs") {
    SuiteOptions options;
    options.collect_equality_examples = true;
    options.union_samples = 0;
    options.lemma_stride = 0;
    const SuiteSummary s = run_suite(6, options);
    CHECK(s.pass());
    CHECK(s.census_positive.equal_and_extremal == 2);
    CHECK(s.census_nullity.equal_and_extremal == 2);
    REQUIRE(s.equality_examples.size() == 2);
    CHECK(canonical_key(s.equality_examples[0].graph) == canonical_key(make_cycle({4, true})));
    CHECK(is_balanced(s.equality_examples[0].graph));
    CHECK(canonical_key(s.equality_examples[1].graph) == canonical_key(make_cycle({6, true})));
    CHECK_FALSE(is_balanced(s.equality_examples[1].graph));
}

TEST_CASE("suite at max_n 2") {
    SuiteOptions options;
    options.union_samples = 0;
    const SuiteSummary s = run_suite(2, options);
    CHECK(s.pass());
    CHECK(s.skeletons_checked == 1);
    CHECK(s.signatures_checked == 1);
    CHECK(s.census_positive.equal_and_extremal == 0);
    CHECK(s.census_positive.equal_not_extremal == 0);
}

TEST_CASE("suite levels grow monotonically") {
    SuiteOptions options;
    options.union_samples = 0;
    options.lemma_stride = 0;
    const SuiteSummary small = run_suite(4, options);
    const SuiteSummary large = run_suite(5, options);
    REQUIRE(large.levels.size() == small.levels.size() + 1);
    for (std::size_t l = 0; l < small.levels.size(); ++l) {
        CHECK(small.levels[l].skeletons == large.levels[l].skeletons);
        CHECK(small.levels[l].signatures == large.levels[l].signatures);
    }
}

TEST_CASE("suite is deterministic across thread counts") {
    SuiteOptions serial;
    serial.collect_equality_examples = true;
    SuiteOptions parallel = serial;
    parallel.threads = 4;
    const SuiteSummary a = run_suite(5, serial);
    const SuiteSummary b = run_suite(5, parallel);
    CHECK(machine_summary(a) == machine_summary(b));
}

TEST_CASE("suite truncation") {
    SuiteOptions options;
    options.union_samples = 0;
    options.max_graphs = 5;
    const SuiteSummary s = run_suite(4, options);
    CHECK(s.truncated);
    CHECK(s.signatures_checked == 5);
    CHECK_THROWS_AS(run_suite(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(9, {}), std::invalid_argument);
}

TEST_CASE("suite covers disconnected skeletons when asked") {
    SuiteOptions options;
    options.connected_only = false;
    options.union_samples = 0;
    const SuiteSummary s = run_suite(3, options);
    CHECK(s.pass());
    CHECK(s.skeletons_checked == 2 + 4);  // all classes on 2 and 3 vertices
}
