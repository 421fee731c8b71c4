#pragma once

#include <span>
#include <string>
#include <vector>

#include "sgi/exact_matrix.hpp"
#include "sgi/inertia.hpp"
#include "sgi/rational.hpp"
#include "sgi/signed_graph.hpp"

namespace sgi {

/// Everything measured about one graph by the bound checks. Only raw numbers
/// are stored; every pass/fail status is derived from them on demand.
///
/// The inequalities under test, for a graph of order n with p pendant vertices
/// and cyclomatic number theta:
///   weak:    i+ >= (n - p)/2 - theta     and the same for i-
///   strict:  i+ >= (n - p + 1)/2 - theta (when applicable), same for i-
///   nullity: eta <= p + 2*theta, strictly <= p + 2*theta - 1 when applicable
/// The strict forms apply when p >= 1, or when p = 0 and two distinct cycles
/// share a vertex. Equality in the weak bounds (and eta = p + 2*theta) holds
/// exactly for disjoint unions of cycles with the right residues, which is
/// what the extremal verdict records.
struct TheoremReport {
    SignedGraph graph;
    int n = 0;
    int m = 0;
    int components = 0;
    int pendants = 0;
    int theta = 0;
    Inertia inertia;
    Rational weak_bound;    // (n - p)/2 - theta
    Rational strict_bound;  // (n - p + 1)/2 - theta
    int nullity_bound = 0;  // p + 2*theta
    bool strict_applicable = false;
    bool judged = false;  // every component has >= 2 vertices; equality flags are
                          // reconciled against the extremal verdict only then
    bool balanced = false;
    bool cycle_disjoint = false;
    bool extremal_verdict = false;

    bool weak_positive_ok() const { return Rational(inertia.positive) >= weak_bound; }
    bool weak_negative_ok() const { return Rational(inertia.negative) >= weak_bound; }
    bool nullity_ok() const { return inertia.zero <= nullity_bound; }
    bool strict_positive_ok() const { return !strict_applicable || Rational(inertia.positive) >= strict_bound; }
    bool strict_negative_ok() const { return !strict_applicable || Rational(inertia.negative) >= strict_bound; }
    bool strict_nullity_ok() const { return !strict_applicable || inertia.zero <= nullity_bound - 1; }

    bool equality_positive() const { return Rational(inertia.positive) == weak_bound; }
    bool equality_negative() const { return Rational(inertia.negative) == weak_bound; }
    bool equality_nullity() const { return inertia.zero == nullity_bound; }
    bool strict_equality_positive() const {
        return strict_applicable && Rational(inertia.positive) == strict_bound;
    }
    bool strict_equality_negative() const {
        return strict_applicable && Rational(inertia.negative) == strict_bound;
    }

    bool bounds_ok() const {
        return weak_positive_ok() && weak_negative_ok() && nullity_ok() && strict_positive_ok() &&
               strict_negative_ok() && strict_nullity_ok();
    }
    /// Both directions of the equality characterization, for all three bounds.
    bool characterization_ok() const {
        return equality_positive() == extremal_verdict && equality_negative() == extremal_verdict &&
               equality_nullity() == extremal_verdict;
    }
    bool all_ok() const { return bounds_ok() && characterization_ok(); }
};

/// Measures g against every bound. Rejects the empty graph. Graphs containing
/// isolated vertices are measured but flagged judged = false: the statements
/// require every component to have two or more vertices.
TheoremReport check_bounds(const SignedGraph& g);

/// One `key=value` record line for machine consumption; includes the single
/// line `.sg` rendering of the graph.
std::string machine_record(const TheoremReport& r);

struct LemmaCheckResult {
    bool pass = true;
    std::vector<std::string> failures;
};

/// Deletion identities on one graph: inertia monotonicity under single-vertex
/// deletion, the pendant-deletion step (i+ and i- drop by exactly one when a
/// pendant and its neighbor go, eta unchanged), component additivity, and for
/// connected graphs with order >= 2 the per-vertex cut identities
/// d >= m + s - r and theta(g - x) = theta(g) - d(x) + s.
LemmaCheckResult check_deletion_lemmas(const SignedGraph& g);

/// Inertia-level interlacing: the principal submatrix on `keep` has no more
/// positive and no more negative eigenvalues than the full matrix.
bool check_interlacing(const SymmetricExactMatrix& a, std::span<const int> keep);

}  // namespace sgi
