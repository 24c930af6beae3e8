#pragma once

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "franklin/invgram.hpp"
#include "franklin/quadratic.hpp"
#include "franklin/recurrences.hpp"
#include "franklin/splines.hpp"

namespace franklin {

enum class Ordering { less, equal, greater };

/// Exact comparison of a rational against gamma = 2 + (33 - 18 sqrt(3))/13.
inline Ordering gamma_compare(const Rat& x) {
    const int s = (QuadraticRational(x) - gamma_value()).sign();
    return s < 0 ? Ordering::less : (s == 0 ? Ordering::equal : Ordering::greater);
}

/// Integral of |k(t_j, .)| from an exact inverse row: on each knot interval
/// the section runs linearly between consecutive row entries, contributing
///   delta/2 * (|a| + |b|)                 when sgn a = sgn b,
///   delta/2 * (a^2 + b^2) / (|a| + |b|)   otherwise
/// (the two cases agree when one endpoint vanishes; both zero contributes 0).
inline Rat kappa(const std::vector<Rat>& row_values, const KnotSequence& ks) {
    const int N = ks.size();
    if (static_cast<int>(row_values.size()) != N)
        throw std::domain_error("kappa: row/knot dimension mismatch");
    Rat total = 0;
    for (int k = 0; k < N; ++k) {
        const Rat& u = row_values[k];
        const Rat& v = row_values[mod_index(k + 1, N)];
        const Rat& delta = ks.gaps[k];
        if (u == 0 && v == 0) continue;
        if (u.sign() * v.sign() >= 0)
            total += delta * (abs(u) + abs(v)) / 2;
        else
            total += delta * (u * u + v * v) / (2 * (abs(u) + abs(v)));
    }
    return total;
}

inline Rat kappa(const InverseRow& row, const KnotSequence& ks) {
    if (row.N != ks.size()) throw std::domain_error("kappa: row/knot dimension mismatch");
    return kappa(row.values(), ks);
}

/// Exact per-row norms kappa(j), their maximum (the operator norm), and the
/// certified comparison against gamma.
struct NormReport {
    KnotConfig cfg;
    std::vector<Rat> kappas;
    Rat norm;
    int argmax{};
    bool below_gamma{};
    std::string decimal;  // 8 decimal places, round-half-even
};

inline NormReport projection_norm(const KnotConfig& cfg) {
    const KnotSequence ks = special_knots(cfg);
    const int N = cfg.points();
    NormReport rep{cfg, {}, Rat(0), 0, false, {}};
    rep.kappas.reserve(N);
    for (int j = 0; j < N; ++j) {
        rep.kappas.push_back(kappa(inverse_row(cfg, j), ks));
        if (rep.kappas.back() > rep.norm) {
            rep.norm = rep.kappas.back();
            rep.argmax = j;
        }
    }
    rep.below_gamma = gamma_compare(rep.norm) == Ordering::less;
    rep.decimal = decimal_string(rep.norm, 8);
    return rep;
}

/// Ratio bounds for consecutive inverse-row numerators. For N even,
/// 1/6 <= g_{k+1}/g_k <= 6 at k = 0 and k = 2nu-1 (sharpened to 1/4..4 at
/// k = 0 when j = 0) and 1/4 <= g_{k+1}/g_k <= 4 elsewhere. For N odd the
/// same bounds hold for N >= 7 on |g|, restricted to |k - j| <= (N-5)/2 or
/// |k - j| >= (N+5)/2. All comparisons are exact cross-multiplied integers.
inline bool check_quotient_bounds(const KnotConfig& cfg, int j) {
    const int N = cfg.points();
    const int nu = cfg.nu;
    if (nu < 1 || 2 * nu > N - 1)
        throw std::domain_error("check_quotient_bounds: requires 1 <= nu <= (N-1)/2");
    if (j < 0 || j >= N) throw std::domain_error("check_quotient_bounds: bad row index");
    std::vector<Int> g;
    g.reserve(N);
    for (int k = 0; k < N; ++k) g.push_back(abs(inverse_numerator(N, nu, j, k)));
    const bool odd = (N % 2) != 0;
    for (int k = 0; k < N; ++k) {
        if (odd) {
            if (N < 7) continue;
            const int dist = k > j ? k - j : j - k;
            if (!(2 * dist <= N - 5 || 2 * dist >= N + 5)) continue;
        }
        const int bound = ((k == 0 && j != 0) || k == 2 * nu - 1) ? 6 : 4;
        const Int& lo = g[k];
        const Int& hi = g[mod_index(k + 1, N)];
        if (bound * lo < hi || bound * hi < lo) return false;
    }
    return true;
}

/// The generic kappa at nu = 1, j = 1 equals a closed form in A, B and phi.
/// With K = N - 1 and D = D(N, 1):
///   N even: 3/D [ (2 + 6 B_K + 2 A_K) phi((1 + A_K - B_K)/(4 B_K))
///                 + 8 sum_{k=2}^{K} A_{k-1} phi(A_{|N/2-k|}/A_{|N/2-k+1|}) ]
///   N odd:  6/D [ (3 B_K + A_K - 1) phi((A_K - B_K - 1)/(4 B_K))
///                 + 4 sum_{k=2}^{K/2} (A_{N-k} - A_{k-1}) phi(q_k) + 4 B_{K/2} ]
/// where for N odd the half-index ratio q_k is the rational
/// (3 B_m + A_m)/(3 B_{m+1} + A_{m+1}) with m = K/2 - k.
inline bool kappa_decomposition_check(const KnotConfig& cfg) {
    const int N = cfg.points();
    if (cfg.nu != 1 || N < 4)
        throw std::domain_error("kappa_decomposition_check: requires nu = 1 and N >= 4");
    const Rat lhs = kappa(inverse_row(cfg, 1), special_knots(cfg));
    const auto A = [](int i) { return hyperbolic_a(i); };
    const auto B = [](int i) { return hyperbolic_b(i); };
    const int K = N - 1;
    const Rat D(inverse_denominator_int(N, 1));
    Rat rhs;
    if (N % 2 == 0) {
        const Rat head = Rat(2 + 6 * B(K) + 2 * A(K)) * phi(Rat(1 + A(K) - B(K)) / Rat(4 * B(K)));
        Rat sum = 0;
        for (int k = 2; k <= K; ++k) {
            const int m1 = std::abs(N / 2 - k);
            const int m2 = std::abs(N / 2 - k + 1);
            sum += Rat(A(k - 1)) * phi(Rat(A(m1)) / Rat(A(m2)));
        }
        rhs = 3 * (head + 8 * sum) / D;
    } else {
        const Rat head = Rat(3 * B(K) + A(K) - 1) * phi(Rat(A(K) - B(K) - 1) / Rat(4 * B(K)));
        Rat sum = 0;
        for (int k = 2; k <= K / 2; ++k) {
            const int m = K / 2 - k;
            const Rat q = Rat(3 * B(m) + A(m)) / Rat(3 * B(m + 1) + A(m + 1));
            sum += Rat(A(N - k) - A(k - 1)) * phi(q);
        }
        rhs = 6 * (head + 4 * sum + 4 * B(K / 2)) / D;
    }
    return lhs == rhs;
}

struct SweepPoint {
    int N{};
    Rat norm;
    std::string gap;  // |norm - gamma| in scientific notation
};

/// |x - gamma| rendered with `sig` significant digits. sqrt(3) is bracketed
/// to 120 decimal places, far below any gap reached at desk scale.
inline std::string gamma_gap_string(const Rat& x, int sig = 30) {
    const Rat lo = (59 - 18 * sqrt3_upper(120)) / 13;
    const Rat hi = (59 - 18 * sqrt3_lower(120)) / 13;
    const Rat gap = (lo + hi) / 2 - x;
    return scientific_string(abs(gap), sig);
}

/// Norms of (n, nu) for n = max(2, nu) .. N_max - nu, in increasing N.
/// With `parallel`, points are computed concurrently and gathered in index
/// order, so the result is identical to the serial mode.
inline std::vector<SweepPoint> asymptotic_sweep(int nu, int N_max, bool parallel = false) {
    if (nu < 0 || N_max < nu + 2) throw std::domain_error("asymptotic_sweep: bad range");
    const auto point = [nu](int n) {
        const KnotConfig cfg(n, nu);
        const NormReport rep = projection_norm(cfg);
        return SweepPoint{cfg.points(), rep.norm, gamma_gap_string(rep.norm)};
    };
    std::vector<SweepPoint> out;
    if (parallel) {
        std::vector<std::future<SweepPoint>> futures;
        for (int n = std::max(2, nu); n + nu <= N_max; ++n)
            futures.push_back(std::async(std::launch::async, point, n));
        for (auto& f : futures) out.push_back(f.get());
    } else {
        for (int n = std::max(2, nu); n + nu <= N_max; ++n) out.push_back(point(n));
    }
    return out;
}

}  // namespace franklin
