#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "franklin/splines.hpp"

namespace franklin {

/// Dense square matrix of exact rationals. Brute-force counterpart of the
/// closed-form inverse rows; every result it feeds is exact.
struct DenseMatrix {
    int dim{};
    std::vector<Rat> e;

    DenseMatrix() = default;
    explicit DenseMatrix(int n) : dim(n), e(static_cast<size_t>(n) * n) {}

    Rat& at(int i, int j) { return e[static_cast<size_t>(i) * dim + j]; }
    const Rat& at(int i, int j) const { return e[static_cast<size_t>(i) * dim + j]; }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) throw std::domain_error("multiply: dimension mismatch");
    DenseMatrix c(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.dim; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

inline bool is_identity(const DenseMatrix& m) {
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            if (m.at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
}

inline DenseMatrix gram_dense(const GramMatrix& g) {
    DenseMatrix m(g.dim);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) m.at(i, j) = g.entry(i, j);
    return m;
}

/// Exact inverse by Gauss-Jordan elimination with row pivoting. Throws on
/// singular input (which would signal a construction bug upstream).
inline DenseMatrix dense_inverse(const DenseMatrix& m) {
    const int n = m.dim;
    DenseMatrix a = m;
    DenseMatrix inv = DenseMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::runtime_error("dense_inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Rat p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Rat f = a.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

/// Pivots of the exact LDL^T factorization (no pivoting; intended for
/// positive definite input, where every pivot must come out positive).
inline std::vector<Rat> ldlt_pivots(const DenseMatrix& m) {
    const int n = m.dim;
    DenseMatrix a = m;
    std::vector<Rat> pivots;
    pivots.reserve(n);
    for (int k = 0; k < n; ++k) {
        const Rat d = a.at(k, k);
        if (d == 0) throw std::runtime_error("ldlt_pivots: zero pivot");
        pivots.push_back(d);
        for (int i = k + 1; i < n; ++i) {
            const Rat f = a.at(i, k) / d;
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return pivots;
}

/// Integral of |k(t_j, .)| over the torus, computed geometrically: the kernel
/// section is linear on each knot interval, running from a = a_{j,k} to
/// b = a_{j,k+1}; with equal signs the trapezoid area applies, otherwise the
/// section is split at its root tau = delta |a| / (|a| + |b|) and the two
/// triangle areas are added. Deliberately shares nothing with the phi route.
inline Rat abs_kernel_integral(int j, const DenseMatrix& inv, const KnotSequence& ks) {
    const int N = ks.size();
    if (inv.dim != N) throw std::domain_error("abs_kernel_integral: dimension mismatch");
    Rat total = 0;
    for (int k = 0; k < N; ++k) {
        const Rat& a = inv.at(j, k);
        const Rat& b = inv.at(j, mod_index(k + 1, N));
        const Rat& delta = ks.gaps[k];
        if (a.sign() * b.sign() >= 0) {
            total += delta * (abs(a) + abs(b)) / 2;
        } else {
            const Rat tau = delta * abs(a) / (abs(a) + abs(b));
            total += tau * abs(a) / 2 + (delta - tau) * abs(b) / 2;
        }
    }
    return total;
}

/// Signed integral of the kernel section; equals 1 exactly because the
/// projection reproduces constants.
inline Rat signed_kernel_integral(int j, const DenseMatrix& inv, const KnotSequence& ks) {
    const int N = ks.size();
    Rat total = 0;
    for (int k = 0; k < N; ++k)
        total += ks.gaps[k] * (inv.at(j, k) + inv.at(j, mod_index(k + 1, N))) / 2;
    return total;
}

/// Composite midpoint rule on |k(t_j, .)| over a uniform grid; a first-order
/// floating-point cross-check of the exact integral.
inline double float_quadrature_check(int j, const DenseMatrix& inv, const KnotSequence& ks,
                                     long grid) {
    if (grid < 1000) throw std::domain_error("float_quadrature_check: grid too small");
    const int N = ks.size();
    std::vector<double> knots(N + 1);
    std::vector<double> vals(N + 1);
    for (int k = 0; k < N; ++k) {
        knots[k] = static_cast<double>(ks.knots[k]);
        vals[k] = static_cast<double>(inv.at(j, k));
    }
    knots[N] = 1.0;
    vals[N] = vals[0];
    double sum = 0.0;
    int cell = 0;
    const double h = 1.0 / static_cast<double>(grid);
    for (long i = 0; i < grid; ++i) {
        const double t = (static_cast<double>(i) + 0.5) * h;
        while (cell + 1 < N && knots[cell + 1] <= t) ++cell;
        const double frac = (t - knots[cell]) / (knots[cell + 1] - knots[cell]);
        sum += std::abs(vals[cell] + (vals[cell + 1] - vals[cell]) * frac);
    }
    return sum * h;
}

/// Brute-force operator norm for an arbitrary periodic knot sequence:
/// max_j of the geometric absolute integral against the dense exact inverse.
inline Rat oracle_norm(const KnotSequence& ks) {
    const DenseMatrix inv = dense_inverse(gram_dense(gram_matrix(ks)));
    Rat best = 0;
    for (int j = 0; j < ks.size(); ++j) {
        const Rat v = abs_kernel_integral(j, inv, ks);
        if (v > best) best = v;
    }
    return best;
}

}  // namespace franklin
