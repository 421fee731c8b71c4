#include "sgi/checks.hpp"

#include <sstream>
#include <stdexcept>

#include "sgi/families.hpp"
#include "sgi/sg_format.hpp"
#include "sgi/structure.hpp"

namespace sgi {

TheoremReport check_bounds(const SignedGraph& g) {
    if (g.order() == 0) throw std::invalid_argument("check_bounds: empty graph (order >= 1 required)");
    TheoremReport r;
    r.graph = g;
    r.n = g.order();
    r.m = g.edge_count();
    auto comps = connected_components(g);
    r.components = static_cast<int>(comps.size());
    r.pendants = pendant_count(g);
    r.theta = g.edge_count() - g.order() + r.components;
    r.inertia = graph_inertia(g);
    r.weak_bound = Rational(r.n - r.pendants, 2) - r.theta;
    r.strict_bound = Rational(r.n - r.pendants + 1, 2) - r.theta;
    r.nullity_bound = r.pendants + 2 * r.theta;
    r.cycle_disjoint = is_cycle_disjoint(g);
    r.strict_applicable = r.pendants >= 1 || (r.pendants == 0 && !r.cycle_disjoint && r.theta >= 2);
    r.balanced = is_balanced(g);
    r.judged = true;
    for (const auto& comp : comps)
        if (comp.size() < 2) r.judged = false;
    r.extremal_verdict = is_extremal_family(g).verdict;
    return r;
}

std::string machine_record(const TheoremReport& r) {
    std::ostringstream out;
    const auto flag = [](bool b) { return b ? '1' : '0'; };
    out << "sg=" << to_sg_record(r.graph);
    out << " n=" << r.n << " m=" << r.m << " c=" << r.components;
    out << " p=" << r.pendants << " theta=" << r.theta;
    out << " ipos=" << r.inertia.positive << " ineg=" << r.inertia.negative << " eta=" << r.inertia.zero;
    out << " weak_bound=" << r.weak_bound << " strict_bound=" << r.strict_bound
        << " nullity_bound=" << r.nullity_bound;
    out << " strict_applicable=" << flag(r.strict_applicable) << " judged=" << flag(r.judged);
    out << " balanced=" << flag(r.balanced) << " cycle_disjoint=" << flag(r.cycle_disjoint);
    out << " extremal=" << flag(r.extremal_verdict);
    out << " weak_ipos_ok=" << flag(r.weak_positive_ok()) << " weak_ineg_ok=" << flag(r.weak_negative_ok());
    out << " nullity_ok=" << flag(r.nullity_ok());
    out << " strict_ipos_ok=" << flag(r.strict_positive_ok())
        << " strict_ineg_ok=" << flag(r.strict_negative_ok())
        << " strict_nullity_ok=" << flag(r.strict_nullity_ok());
    out << " eq_ipos=" << flag(r.equality_positive()) << " eq_ineg=" << flag(r.equality_negative())
        << " eq_eta=" << flag(r.equality_nullity());
    out << " ok=" << flag(r.all_ok());
    return out.str();
}

namespace {

std::string graph_tag(const SignedGraph& g) { return "[" + to_sg_record(g) + "]"; }

}  // namespace

LemmaCheckResult check_deletion_lemmas(const SignedGraph& g) {
    LemmaCheckResult result;
    const auto fail = [&](const std::string& msg) {
        result.pass = false;
        result.failures.push_back(msg + " " + graph_tag(g));
    };

    const Inertia base = graph_inertia(g);

    for (int x = 0; x < g.order(); ++x) {
        const Inertia sub = graph_inertia(delete_vertices(g, std::vector<int>{x}).graph);
        if (sub.positive > base.positive || sub.negative > base.negative)
            fail("deletion-monotonicity: removing vertex " + std::to_string(x) + " raised an inertia index");
    }

    for (int u = 0; u < g.order(); ++u) {
        if (g.degree(u) != 1) continue;
        const int v = g.neighbors(u)[0];
        const Inertia rest = graph_inertia(delete_vertices(g, std::vector<int>{u, v}).graph);
        if (base.positive != rest.positive + 1 || base.negative != rest.negative + 1 ||
            base.zero != rest.zero)
            fail("pendant-deletion: removing pendant " + std::to_string(u) + " and neighbor " +
                 std::to_string(v) + " gave " + to_string(rest) + " against " + to_string(base));
    }

    const auto comps = connected_components(g);
    Inertia sum;
    for (const auto& comp : comps) sum = sum + graph_inertia(induced_subgraph(g, comp));
    if (sum != base) fail("component-additivity: " + to_string(sum) + " != " + to_string(base));

    if (comps.size() == 1 && g.order() >= 2) {
        const int theta = cyclomatic_number(g);
        for (int x = 0; x < g.order(); ++x) {
            const auto stats = vertex_local_stats(g, x);
            if (stats.degree < stats.two_degree_neighbors + stats.components_after_deletion -
                                   stats.components_with_two_degree_neighbors)
                fail("local-degree-inequality: d < m + s - r at vertex " + std::to_string(x));
            const int theta_minus = cyclomatic_number(delete_vertices(g, std::vector<int>{x}).graph);
            if (theta_minus != theta - stats.degree + stats.components_after_deletion)
                fail("cut-cyclomatic-identity: theta(g-x) mismatch at vertex " + std::to_string(x));
        }
    }
    return result;
}

bool check_interlacing(const SymmetricExactMatrix& a, std::span<const int> keep) {
    const Inertia whole = inertia_by_congruence(a);
    const Inertia part = inertia_by_congruence(principal_submatrix(a, keep));
    return part.positive <= whole.positive && part.negative <= whole.negative;
}

}  // namespace sgi
