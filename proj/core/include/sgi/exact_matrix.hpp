#pragma once

#include <span>
#include <vector>

#include "sgi/rational.hpp"
#include "sgi/signed_graph.hpp"

namespace sgi {

/// Dense symmetric matrix over exact rationals. set() writes both mirror
/// entries, so matrices built through the public interface are symmetric by
/// construction; from_rows() is the entry point for untrusted data and rejects
/// asymmetric input.
class SymmetricExactMatrix {
  public:
    SymmetricExactMatrix() = default;
    explicit SymmetricExactMatrix(int dimension);

    static SymmetricExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int dimension() const { return n_; }
    const Rational& at(int i, int j) const;
    void set(int i, int j, const Rational& value);

    bool has_integer_entries() const;

    friend bool operator==(const SymmetricExactMatrix&, const SymmetricExactMatrix&) = default;

  private:
    void check_index(int i, int j) const;

    int n_ = 0;
    std::vector<Rational> cells_;  // row-major, n_ * n_
};

/// A(g): entry (u, v) is the sign of edge uv, 0 when absent; zero diagonal.
SymmetricExactMatrix adjacency_matrix(const SignedGraph& g);

/// Principal submatrix on `keep` (order-preserving; duplicates rejected).
SymmetricExactMatrix principal_submatrix(const SymmetricExactMatrix& a, std::span<const int> keep);

}  // namespace sgi
