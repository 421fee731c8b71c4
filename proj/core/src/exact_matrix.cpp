#include "sgi/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sgi {

SymmetricExactMatrix::SymmetricExactMatrix(int dimension) {
    if (dimension < 0) throw std::invalid_argument("SymmetricExactMatrix: negative dimension");
    n_ = dimension;
    cells_.assign(static_cast<std::size_t>(n_) * n_, Rational(0));
}

SymmetricExactMatrix SymmetricExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymmetricExactMatrix m(n);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("SymmetricExactMatrix: row " + std::to_string(i) + " has wrong length");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (rows[i][j] != rows[j][i])
                throw std::invalid_argument("SymmetricExactMatrix: asymmetric input at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
            m.set(i, j, rows[i][j]);
        }
    return m;
}

void SymmetricExactMatrix::check_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("SymmetricExactMatrix: index out of range");
}

const Rational& SymmetricExactMatrix::at(int i, int j) const {
    check_index(i, j);
    return cells_[static_cast<std::size_t>(i) * n_ + j];
}

void SymmetricExactMatrix::set(int i, int j, const Rational& value) {
    check_index(i, j);
    cells_[static_cast<std::size_t>(i) * n_ + j] = value;
    cells_[static_cast<std::size_t>(j) * n_ + i] = value;
}

bool SymmetricExactMatrix::has_integer_entries() const {
    for (const auto& c : cells_)
        if (denominator(c) != 1) return false;
    return true;
}

SymmetricExactMatrix adjacency_matrix(const SignedGraph& g) {
    SymmetricExactMatrix a(g.order());
    for (const auto& e : g.edges()) a.set(e.u, e.v, Rational(e.sign));
    return a;
}

SymmetricExactMatrix principal_submatrix(const SymmetricExactMatrix& a, std::span<const int> keep) {
    std::vector<char> used(a.dimension(), 0);
    for (int i : keep) {
        if (i < 0 || i >= a.dimension()) throw std::invalid_argument("principal_submatrix: index out of range");
        if (used[i]) throw std::invalid_argument("principal_submatrix: duplicate index");
        used[i] = 1;
    }
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    SymmetricExactMatrix b(static_cast<int>(sorted.size()));
    for (int i = 0; i < b.dimension(); ++i)
        for (int j = i; j < b.dimension(); ++j) b.set(i, j, a.at(sorted[i], sorted[j]));
    return b;
}

}  // namespace sgi
