#pragma once

#include <string>
#include <vector>

#include "sgi/exact_matrix.hpp"
#include "sgi/signed_graph.hpp"

namespace sgi {

/// Counts of positive, negative and zero eigenvalues of a symmetric matrix.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int rank() const { return positive + negative; }
    int dimension() const { return positive + negative + zero; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
    friend Inertia operator+(const Inertia& a, const Inertia& b) {
        return {a.positive + b.positive, a.negative + b.negative, a.zero + b.zero};
    }
};

std::string to_string(const Inertia& in);  // "(i+, i-, eta)"

/// Exact inertia by symmetric congruence reduction over rationals: 1x1 pivots
/// on nonzero diagonal entries (first in index order, surfaced by symmetric
/// permutations), and 2x2 pivots of the form [[0,a],[a,0]] — one positive and
/// one negative index each — once the remaining diagonal is entirely zero.
Inertia inertia_by_congruence(const SymmetricExactMatrix& a);

/// Integer polynomial; coefficient[k] multiplies x^k.
using IntPolynomial = std::vector<BigInt>;

/// Exact characteristic polynomial det(xI - A), monic of degree dimension().
/// Defined for integer matrices only; throws std::invalid_argument otherwise.
IntPolynomial char_poly(const SymmetricExactMatrix& a);

/// Inertia read off a real-rooted integer polynomial: the zero multiplicity is
/// the number of trailing zero coefficients and the positive count is the
/// number of sign changes in the remaining coefficients (exact for real roots).
Inertia inertia_from_char_poly(const IntPolynomial& p);

/// inertia_by_congruence(adjacency_matrix(g)).
Inertia graph_inertia(const SignedGraph& g);

}  // namespace sgi
