#include "sgi/families.hpp"

#include <stdexcept>

#include "sgi/structure.hpp"

namespace sgi {

SignedGraph make_cycle(const CycleSpec& spec) {
    if (spec.length < 3) throw std::invalid_argument("make_cycle: length >= 3 required");
    std::vector<SignedEdge> edges;
    for (int i = 0; i + 1 < spec.length; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({spec.length - 1, 0, spec.balanced ? 1 : -1});
    return SignedGraph(spec.length, std::move(edges));
}

SignedGraph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: n >= 1 required");
    std::vector<SignedEdge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return SignedGraph(n, std::move(edges));
}

Inertia cycle_inertia_formula(const CycleSpec& spec) {
    if (spec.length < 3) throw std::invalid_argument("cycle_inertia_formula: length >= 3 required");
    const int n = spec.length;
    int ip, im;
    switch (n % 4) {
        case 0:
            ip = im = spec.balanced ? n / 2 - 1 : n / 2;
            break;
        case 1:
            ip = spec.balanced ? (n + 1) / 2 : (n - 1) / 2;
            im = spec.balanced ? (n - 1) / 2 : (n + 1) / 2;
            break;
        case 2:
            ip = im = spec.balanced ? n / 2 : n / 2 - 1;
            break;
        default:  // 3
            ip = spec.balanced ? (n - 1) / 2 : (n + 1) / 2;
            im = spec.balanced ? (n + 1) / 2 : (n - 1) / 2;
            break;
    }
    return {ip, im, n - ip - im};
}

Inertia path_inertia_formula(int n) {
    if (n < 1) throw std::invalid_argument("path_inertia_formula: n >= 1 required");
    return {n / 2, n / 2, n % 2};
}

ExtremalCertificate is_extremal_family(const SignedGraph& g) {
    ExtremalCertificate cert;
    auto comps = connected_components(g);

    for (const auto& comp : comps)
        if (comp.size() < 2) {
            cert.reason = "isolated-vertex";
            return cert;
        }

    bool residues_ok = true;
    for (const auto& comp : comps) {
        bool cycle = comp.size() >= 3;
        for (int v : comp)
            if (g.degree(v) != 2) cycle = false;
        if (!cycle) {
            cert.reason = "component-not-cycle";
            cert.components.clear();
            return cert;
        }
        CycleSpec spec;
        spec.length = static_cast<int>(comp.size());
        spec.balanced = is_balanced(induced_subgraph(g, comp));
        cert.components.push_back(spec);
        const int residue = spec.length % 4;
        if (!((spec.balanced && residue == 0) || (!spec.balanced && residue == 2))) residues_ok = false;
    }
    if (comps.empty()) {
        // The empty graph has no components at all; it is vacuously a union of
        // zero cycles but carries no equality content, so it is rejected.
        cert.reason = "component-not-cycle";
        return cert;
    }
    if (!residues_ok) {
        cert.reason = "wrong-residue";
        return cert;
    }
    cert.verdict = true;
    return cert;
}

}  // namespace sgi
