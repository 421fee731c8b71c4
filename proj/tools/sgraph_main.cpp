// sgraph: analyze .sg files, generate named families, contract cycle-disjoint
// graphs, and run the exhaustive bound-verification suite.
//
// Exit codes: 0 = pass, 1 = mathematically negative result (a bound violation,
// a failed agreement, an unsupported structure), 2 = usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <thread>

#include "sgi/checks.hpp"
#include "sgi/enumerate.hpp"
#include "sgi/families.hpp"
#include "sgi/sg_format.hpp"
#include "sgi/structure.hpp"
#include "sgi/suite.hpp"

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int load_or_complain(const std::string& path, sgi::SignedGraph& out) {
    try {
        out = sgi::load_sg(path);
        return 0;
    } catch (const sgi::ParseError& e) {
        std::cerr << "parse error: " << path << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

std::string component_balance_string(const sgi::SignedGraph& g) {
    std::string out;
    for (const auto& comp : sgi::connected_components(g)) {
        if (!out.empty()) out += ",";
        out += sgi::is_balanced(sgi::induced_subgraph(g, comp)) ? "+" : "-";
    }
    return out.empty() ? "-none-" : out;
}

int run_analyze(const std::string& path, bool machine) {
    sgi::SignedGraph g;
    if (int rc = load_or_complain(path, g)) return rc;
    if (g.order() == 0) {
        std::cout << (machine ? "sg=0,0 n=0 note=empty-graph\n"
                              : "empty graph: nothing to analyze (bounds need order >= 1)\n");
        return 0;
    }
    const sgi::TheoremReport r = sgi::check_bounds(g);
    if (machine) {
        std::cout << sgi::machine_record(r) << " component_balance=" << component_balance_string(g)
                  << "\n";
    } else {
        std::cout << "graph: n=" << r.n << " m=" << r.m << " components=" << r.components << "\n";
        std::cout << "parameters: theta=" << r.theta << " pendants=" << r.pendants << "\n";
        std::cout << "balance: " << (r.balanced ? "balanced" : "unbalanced") << " (per component: "
                  << component_balance_string(g) << ")\n";
        std::cout << "cycle-disjoint: " << yes_no(r.cycle_disjoint) << "\n";
        std::cout << "inertia (i+, i-, eta): " << to_string(r.inertia) << "\n";
        std::cout << "weak bound (n-p)/2 - theta = " << r.weak_bound << ": i+ "
                  << (r.weak_positive_ok() ? "pass" : "FAIL") << (r.equality_positive() ? " (equality)" : "")
                  << ", i- " << (r.weak_negative_ok() ? "pass" : "FAIL")
                  << (r.equality_negative() ? " (equality)" : "") << "\n";
        if (r.strict_applicable) {
            std::cout << "strict bound (n-p+1)/2 - theta = " << r.strict_bound << ": i+ "
                      << (r.strict_positive_ok() ? "pass" : "FAIL") << ", i- "
                      << (r.strict_negative_ok() ? "pass" : "FAIL") << "\n";
        } else {
            std::cout << "strict bound: not applicable (p = 0 and no two cycles share a vertex)\n";
        }
        std::cout << "nullity bound p + 2*theta = " << r.nullity_bound << ": "
                  << (r.nullity_ok() ? "pass" : "FAIL") << (r.equality_nullity() ? " (equality)" : "");
        if (r.strict_applicable)
            std::cout << "; strict <= " << (r.nullity_bound - 1) << ": "
                      << (r.strict_nullity_ok() ? "pass" : "FAIL");
        std::cout << "\n";
        std::cout << "extremal family: " << yes_no(r.extremal_verdict) << "\n";
        if (!r.judged)
            std::cout << "note: contains an isolated vertex; bounds reported but not judged\n";
        std::cout << "result: " << ((!r.judged || r.all_ok()) ? "PASS" : "FAIL") << "\n";
    }
    return (r.judged && !r.all_ok()) ? 1 : 0;
}

int run_family(const std::string& kind, int n, bool unbalanced) {
    sgi::SignedGraph g;
    sgi::Inertia formula;
    try {
        if (kind == "cycle") {
            const sgi::CycleSpec spec{n, !unbalanced};
            g = sgi::make_cycle(spec);
            formula = sgi::cycle_inertia_formula(spec);
        } else {
            if (unbalanced) {
                std::cerr << "error: --unbalanced applies to cycles only\n";
                return 2;
            }
            g = sgi::make_path(n);
            formula = sgi::path_inertia_formula(n);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const sgi::Inertia computed = sgi::graph_inertia(g);
    std::cout << sgi::to_sg(g);
    std::cout << "# formula inertia:  " << to_string(formula) << "\n";
    std::cout << "# computed inertia: " << to_string(computed) << "\n";
    std::cout << "# agreement: " << yes_no(formula == computed) << "\n";
    return formula == computed ? 0 : 1;
}

int run_contract(const std::string& path) {
    sgi::SignedGraph g;
    if (int rc = load_or_complain(path, g)) return rc;
    if (g.order() == 0 || sgi::connected_components(g).size() != 1) {
        std::cout << "not contractible: the graph is not connected\n";
        return 1;
    }
    if (!sgi::is_cycle_disjoint(g)) {
        std::cout << "not contractible: two distinct cycles share a vertex\n";
        return 1;
    }
    const sgi::ContractionTree tree = sgi::contraction_tree(g);
    std::cout << "nodes: " << tree.nodes.size() << "\n";
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& node = tree.nodes[i];
        std::cout << "  " << i << ": ";
        if (node.is_cycle()) {
            std::cout << "C" << node.cycle->vertices.size() << (node.cycle->sign > 0 ? "+" : "-") << " [";
            for (std::size_t k = 0; k < node.cycle->vertices.size(); ++k)
                std::cout << (k ? "," : "") << node.cycle->vertices[k];
            std::cout << "]";
        } else {
            std::cout << "v" << node.host_vertex;
        }
        std::cout << "\n";
    }
    std::cout << "edges: " << tree.edges.size() << "\n";
    for (auto [a, b] : tree.edges) std::cout << "  " << a << " -- " << b << "\n";
    return 0;
}

int run_verify(int max_n, bool include_n8, bool all_graphs, int union_samples, int lemma_stride,
               std::uint64_t seed, int jobs, long max_graphs, bool machine, const std::string& report_path) {
    if (max_n < 2 || max_n > sgi::kEnumerationCap) {
        std::cerr << "error: --max-n must lie in 2.." << sgi::kEnumerationCap << "\n";
        return 2;
    }
    if (max_n == sgi::kEnumerationCap && !include_n8) {
        std::cerr << "error: --max-n 8 runs for tens of minutes; confirm with --include-n8\n";
        return 2;
    }
    sgi::SuiteOptions options;
    options.connected_only = !all_graphs;
    options.union_samples = union_samples;
    options.lemma_stride = lemma_stride;
    options.seed = seed;
    options.max_graphs = max_graphs;
    options.threads = jobs > 0 ? jobs : std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    const sgi::SuiteSummary summary = sgi::run_suite(max_n, options);
    std::cout << (machine ? sgi::machine_summary(summary) : sgi::human_summary(summary));
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write report to " << report_path << "\n";
            return 2;
        }
        out << sgi::machine_summary(summary);
    }
    return summary.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sgraph: exact inertia and structural bounds for signed graphs"};
    app.require_subcommand(1);

    std::string path;
    bool machine = false;

    auto* analyze = app.add_subcommand("analyze", "analyze one .sg file");
    analyze->add_option("file", path, "path to a .sg file")->required();
    analyze->add_flag("--machine", machine, "one-line key=value output");

    std::string family_kind;
    int family_n = 0;
    bool unbalanced = false;
    auto* family = app.add_subcommand("family", "emit a named family member with its inertia");
    family->add_option("kind", family_kind, "cycle | path")
        ->required()
        ->check(CLI::IsMember({"cycle", "path"}));
    family->add_option("n", family_n, "order")->required();
    family->add_flag("--unbalanced", unbalanced, "one negative edge instead of all positive (cycles)");

    auto* contract = app.add_subcommand("contract", "print the cycle-contraction tree of a .sg file");
    contract->add_option("file", path, "path to a .sg file")->required();

    int max_n = 5;
    bool include_n8 = false, all_graphs = false;
    int union_samples = 32, lemma_stride = 50, jobs = 0;
    long max_graphs = 0;
    std::uint64_t seed = 20240901;
    std::string report_path;
    auto* verify = app.add_subcommand("verify", "exhaustively verify the bounds on small graphs");
    verify->add_option("--max-n", max_n, "largest order to enumerate (2..8)");
    verify->add_flag("--include-n8", include_n8, "allow the expensive n = 8 level");
    verify->add_flag("--all-graphs", all_graphs, "enumerate disconnected skeletons too");
    verify->add_option("--union-samples", union_samples, "number of sampled disjoint unions");
    verify->add_option("--lemma-stride", lemma_stride, "deletion-lemma check stride (0 = off)");
    verify->add_option("--seed", seed, "seed for all sampling");
    verify->add_option("--jobs", jobs, "worker threads (0 = auto)");
    verify->add_option("--max-graphs", max_graphs, "stop after this many signatures (0 = unlimited)");
    verify->add_flag("--machine", machine, "line-oriented key=value output");
    verify->add_option("--report", report_path, "also write the machine summary to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(path, machine);
        if (*family) return run_family(family_kind, family_n, unbalanced);
        if (*contract) return run_contract(path);
        if (*verify)
            return run_verify(max_n, include_n8, all_graphs, union_samples, lemma_stride, seed, jobs,
                              max_graphs, machine, report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
