#pragma once

#include <string>
#include <vector>

#include "sgi/inertia.hpp"
#include "sgi/signed_graph.hpp"

namespace sgi {

/// A signed cycle up to switching: only the length and the balance matter.
struct CycleSpec {
    int length = 3;
    bool balanced = true;

    friend bool operator==(const CycleSpec&, const CycleSpec&) = default;
};

/// Cycle 0-1-...-(n-1)-0. Balanced: all edges +. Unbalanced: all + except one
/// - edge between n-1 and 0 (any unbalanced signature on a cycle switches to
/// this one). length >= 3.
SignedGraph make_cycle(const CycleSpec& spec);

/// Path 0-1-...-(n-1), all edges +. n >= 1.
SignedGraph make_path(int n);

/// Closed-form inertia of a signed cycle, by length mod 4 and balance.
Inertia cycle_inertia_formula(const CycleSpec& spec);

/// (floor(n/2), floor(n/2), n mod 2).
Inertia path_inertia_formula(int n);

/// Outcome of the extremal-family recognizer. verdict is true exactly when
/// every connected component is a cycle whose (length mod 4, balance) pair is
/// (0, balanced) or (2, unbalanced). `components` lists the specs of the
/// components that are cycles, in order of smallest contained vertex.
struct ExtremalCertificate {
    std::vector<CycleSpec> components;
    bool verdict = false;
    std::string reason;  // "isolated-vertex" | "component-not-cycle" | "wrong-residue"; empty when true
};

ExtremalCertificate is_extremal_family(const SignedGraph& g);

}  // namespace sgi
