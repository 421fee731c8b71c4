#include "sgi/inertia.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sgi {

std::string to_string(const Inertia& in) {
    std::ostringstream out;
    out << '(' << in.positive << ", " << in.negative << ", " << in.zero << ')';
    return out.str();
}

namespace {

class DenseWork {
  public:
    explicit DenseWork(const SymmetricExactMatrix& a) : n_(a.dimension()), cells_(n_ * n_) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) cells_[i * n_ + j] = a.at(i, j);
    }

    Rational& at(int i, int j) { return cells_[i * n_ + j]; }
    int n() const { return n_; }

    void swap_symmetric(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
        for (int k = 0; k < n_; ++k) std::swap(at(k, i), at(k, j));
    }

  private:
    int n_;
    std::vector<Rational> cells_;
};

}  // namespace

Inertia inertia_by_congruence(const SymmetricExactMatrix& a) {
    DenseWork m(a);
    const int n = m.n();
    Inertia result;
    int k = 0;
    while (k < n) {
        int diag = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, i) != 0) {
                diag = i;
                break;
            }
        if (diag >= 0) {
            m.swap_symmetric(k, diag);
            const Rational pivot = m.at(k, k);
            if (pivot > 0)
                ++result.positive;
            else
                ++result.negative;
            for (int r = k + 1; r < n; ++r) {
                if (m.at(r, k) == 0) continue;
                const Rational factor = m.at(r, k) / pivot;
                for (int c = k + 1; c < n; ++c) m.at(r, c) -= factor * m.at(k, c);
            }
            // row k must stay intact while other rows eliminate against it
            for (int r = k + 1; r < n; ++r) {
                m.at(r, k) = 0;
                m.at(k, r) = 0;
            }
            ++k;
            continue;
        }
        // Remaining diagonal is all zero: find an off-diagonal pivot pair.
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) {
            result.zero += n - k;
            break;
        }
        m.swap_symmetric(k, pi);
        if (pj == k) pj = pi;  // the swap moved the partner
        m.swap_symmetric(k + 1, pj);
        const Rational a_off = m.at(k, k + 1);
        ++result.positive;
        ++result.negative;
        // Schur complement against the block [[0,a],[a,0]]:
        //   M'[r][c] = M[r][c] - (M[r][k+1]*M[c][k] + M[r][k]*M[c][k+1]) / a
        std::vector<Rational> col_i(n), col_j(n);
        for (int r = k + 2; r < n; ++r) {
            col_i[r] = m.at(r, k);
            col_j[r] = m.at(r, k + 1);
        }
        for (int r = k + 2; r < n; ++r) {
            for (int c = r; c < n; ++c) {
                Rational delta = (col_j[r] * col_i[c] + col_i[r] * col_j[c]) / a_off;
                if (delta != 0) {
                    m.at(r, c) -= delta;
                    if (c != r) m.at(c, r) = m.at(r, c);
                }
            }
        }
        for (int r = k + 2; r < n; ++r) {
            m.at(r, k) = m.at(k, r) = 0;
            m.at(r, k + 1) = m.at(k + 1, r) = 0;
        }
        k += 2;
    }
    result.zero = n - result.positive - result.negative;
    return result;
}

IntPolynomial char_poly(const SymmetricExactMatrix& a) {
    if (!a.has_integer_entries())
        throw std::invalid_argument("char_poly: defined for integer matrices only");
    const int n = a.dimension();
    // Faddeev-LeVerrier: every division below is by an integer k and is exact
    // for integer input, so coefficients come out with denominator 1.
    std::vector<Rational> work(static_cast<std::size_t>(n) * n), next(work.size());
    std::vector<Rational> coeff(n + 1);
    coeff[n] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) work[i * n + j] = a.at(i, j);  // M_1 = A
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A * (M_{k-1} + c_{n-k+1} I)
            for (int i = 0; i < n; ++i) work[i * n + i] += coeff[n - k + 1];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational sum = 0;
                    for (int l = 0; l < n; ++l) {
                        const Rational& alv = a.at(i, l);
                        if (alv != 0) sum += alv * work[l * n + j];
                    }
                    next[i * n + j] = std::move(sum);
                }
            work.swap(next);
        }
        Rational trace = 0;
        for (int i = 0; i < n; ++i) trace += work[i * n + i];
        coeff[n - k] = -trace / k;
    }
    IntPolynomial out(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (denominator(coeff[i]) != 1)
            throw std::logic_error("char_poly: non-integer coefficient (unreachable for integer input)");
        out[i] = numerator(coeff[i]);
    }
    return out;
}

Inertia inertia_from_char_poly(const IntPolynomial& p) {
    bool all_zero = true;
    for (const auto& c : p)
        if (c != 0) {
            all_zero = false;
            break;
        }
    if (p.empty() || all_zero) throw std::invalid_argument("inertia_from_char_poly: zero polynomial");

    const int degree = static_cast<int>(p.size()) - 1;
    if (p[degree] == 0) throw std::invalid_argument("inertia_from_char_poly: leading coefficient is zero");

    int eta = 0;
    while (p[eta] == 0) ++eta;

    int changes = 0;
    int prev = 0;  // sign of the previous nonzero coefficient
    for (int i = eta; i <= degree; ++i) {
        if (p[i] == 0) continue;
        const int s = p[i] > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    Inertia result;
    result.positive = changes;
    result.zero = eta;
    result.negative = degree - eta - changes;
    return result;
}

Inertia graph_inertia(const SignedGraph& g) { return inertia_by_congruence(adjacency_matrix(g)); }

}  // namespace sgi
