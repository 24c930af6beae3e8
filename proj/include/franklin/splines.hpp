#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "franklin/rational.hpp"

namespace franklin {

/// Parameters (n, nu) of a partially equally spaced knot set on the torus:
/// 2*nu knots at spacing 1/(2n) followed by knots at spacing 1/n, N = n + nu
/// knots in total. nu = 0 and nu = n both give equally spaced knots (with N
/// and 2n points respectively).
struct KnotConfig {
    int n{};
    int nu{};

    KnotConfig(int n_, int nu_) : n(n_), nu(nu_) {
        if (n < 1 || nu < 0 || nu > n || n + nu < 2)
            throw std::domain_error("KnotConfig: require n >= 1, 0 <= nu <= n, n + nu >= 2");
    }

    int points() const { return n + nu; }
    bool equally_spaced() const { return nu == 0 || nu == n; }

    /// nu = n describes the same knot set as (2n, 0); fold it onto that form.
    KnotConfig canonical() const { return nu == n ? KnotConfig(2 * n, 0) : *this; }
};

/// Strictly increasing rational knots t_0 = 0 < t_1 < ... < t_{N-1} < 1 on
/// the torus, with gaps[j] = t_{j+1} - t_j and the wraparound gap
/// gaps[N-1] = 1 - t_{N-1}.
struct KnotSequence {
    std::vector<Rat> knots;
    std::vector<Rat> gaps;

    int size() const { return static_cast<int>(knots.size()); }

    static KnotSequence from_knots(std::vector<Rat> pts) {
        if (pts.size() < 2) throw std::domain_error("KnotSequence: need at least 2 knots");
        if (pts.front() != 0) throw std::domain_error("KnotSequence: t_0 must be 0");
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            if (!(pts[i] < pts[i + 1]))
                throw std::domain_error("KnotSequence: knots must be strictly increasing");
        if (!(pts.back() < 1)) throw std::domain_error("KnotSequence: knots must lie in [0,1)");
        KnotSequence ks;
        ks.gaps.reserve(pts.size());
        for (size_t i = 0; i + 1 < pts.size(); ++i) ks.gaps.push_back(pts[i + 1] - pts[i]);
        ks.gaps.push_back(1 - pts.back());
        ks.knots = std::move(pts);
        return ks;
    }
};

/// The knot set of a KnotConfig: t_j = j/(2n) for j <= 2*nu, (j - nu)/n after.
inline KnotSequence special_knots(const KnotConfig& cfg) {
    const int N = cfg.points();
    std::vector<Rat> pts;
    pts.reserve(N);
    for (int j = 0; j < N; ++j) {
        if (j <= 2 * cfg.nu)
            pts.emplace_back(Int(j), Int(2 * cfg.n));
        else
            pts.emplace_back(Int(j - cfg.nu), Int(cfg.n));
    }
    return KnotSequence::from_knots(std::move(pts));
}

/// Periodic degree-1 B-spline (hat function): N_j(t_k) = [j == k], linear
/// between adjacent knots, wrapping around the torus. t is reduced mod 1.
inline Rat bspline_eval(const KnotSequence& ks, int j, Rat t) {
    const int N = ks.size();
    if (j < 0 || j >= N) throw std::domain_error("bspline_eval: index out of range");
    if (t < 0 || t >= 1) t -= Rat(floor_to_int(t));
    const auto it = std::upper_bound(ks.knots.begin(), ks.knots.end(), t);
    const int l = static_cast<int>(it - ks.knots.begin()) - 1;  // t in [t_l, t_{l+1})
    if (l == j) {
        const Rat right = (l == N - 1) ? Rat(1) : ks.knots[l + 1];
        return (right - t) / ks.gaps[l];
    }
    if (l == mod_index(j - 1, N)) return (t - ks.knots[l]) / ks.gaps[l];
    return Rat(0);
}

/// Symmetric periodic tridiagonal Gram matrix <N_j, N_k>. diag[j] and off[j]
/// hold (gaps[j-1] + gaps[j])/3 and gaps[j]/6; for N = 2 the two off-diagonal
/// interval contributions land on the same entry and are merged by entry().
struct GramMatrix {
    int dim{};
    std::vector<Rat> diag;
    std::vector<Rat> off;

    Rat entry(int j, int k) const {
        j = mod_index(j, dim);
        k = mod_index(k, dim);
        if (j == k) return diag[j];
        if (dim == 2) return off[0] + off[1];
        if (k == mod_index(j + 1, dim)) return off[j];
        if (j == mod_index(k + 1, dim)) return off[k];
        return Rat(0);
    }

    /// Row sums equal the B-spline integrals (gaps[j-1] + gaps[j])/2.
    Rat row_sum(int j) const {
        if (dim == 2) return entry(j, j) + entry(j, j + 1);
        return entry(j, j) + entry(j, j + 1) + entry(j, j - 1);
    }
};

inline GramMatrix gram_matrix(const KnotSequence& ks) {
    const int N = ks.size();
    GramMatrix g;
    g.dim = N;
    g.diag.reserve(N);
    g.off.reserve(N);
    for (int j = 0; j < N; ++j) {
        g.diag.push_back((ks.gaps[mod_index(j - 1, N)] + ks.gaps[j]) / 3);
        g.off.push_back(ks.gaps[j] / 6);
    }
    return g;
}

}  // namespace franklin
