#pragma once

#include <stdexcept>
#include <vector>

#include "franklin/recurrences.hpp"
#include "franklin/splines.hpp"

namespace franklin {

/// Equally spaced knots, N points: numerator of the first inverse row,
/// g_k = B_{N-k} + (-1)^N B_k, valid for 0 <= k <= N.
inline Int equal_knot_numerator(int N, int k) {
    if (N < 2 || k < 0 || k > N)
        throw std::domain_error("equal_knot_numerator: index out of range");
    return hyperbolic_b(N - k) + sign_pow(N) * hyperbolic_b(k);
}

/// Equally spaced common denominator D(N) = 2((-1)^{N-1} + A_N).
inline Int equal_knot_denominator(int N) {
    if (N < 2) throw std::domain_error("equal_knot_denominator: N < 2");
    return 2 * (Int(sign_pow(N - 1)) + hyperbolic_a(N));
}

/// Common denominator of the inverse Gram entries,
/// D(N, nu) = 2 A_N + (3/2) B_{2nu} B_{N-2nu} - 2 (-1)^N.
/// B_{2nu} = 2 A_nu B_nu is even, so the value is always an integer.
inline Int inverse_denominator_int(int N, int nu) {
    if (N < 2 || nu < 0 || 2 * nu > N)
        throw std::domain_error("inverse_denominator: require N >= 2, 0 <= 2nu <= N");
    const Int cross = 3 * hyperbolic_b(2 * nu) * hyperbolic_b(N - 2 * nu);
    if ((cross & 1) != 0) throw std::logic_error("inverse_denominator: odd cross term");
    return 2 * hyperbolic_a(N) + cross / 2 - 2 * sign_pow(N);
}

inline Rat inverse_denominator(int N, int nu) { return Rat(inverse_denominator_int(N, nu)); }

/// The closed-form numerator g(N, nu, j, k) has six expressions selected by
/// where the row j and column k sit relative to the fine band (indices
/// 0..2nu-1, knot spacing 1/(2n)) and the coarse band (spacing 1/n).
/// Adjacent expressions agree on their overlap (k = j and k = 2nu).
enum class GBranch {
    fine_left,     // j <= 2nu-1, k <= j
    fine_mid,      // j <= 2nu-1, j <= k <= 2nu
    fine_right,    // j <= 2nu-1, 2nu <= k
    coarse_left,   // j >= 2nu,   k <= 2nu
    coarse_mid,    // j >= 2nu,   2nu <= k <= j
    coarse_right,  // j >= 2nu,   j <= k
};

/// Every branch whose (j, k) constraints hold, in declaration order.
inline std::vector<GBranch> applicable_branches(int N, int nu, int j, int k) {
    if (nu < 1 || 2 * nu > N - 1 || j < 0 || j > N - 1 || k < 0 || k > N - 1)
        throw std::domain_error("applicable_branches: parameters out of range");
    std::vector<GBranch> out;
    if (j <= 2 * nu - 1) {
        if (k <= j) out.push_back(GBranch::fine_left);
        if (j <= k && k <= 2 * nu) out.push_back(GBranch::fine_mid);
        if (2 * nu <= k) out.push_back(GBranch::fine_right);
    } else {
        if (k <= 2 * nu) out.push_back(GBranch::coarse_left);
        if (2 * nu <= k && k <= j) out.push_back(GBranch::coarse_mid);
        if (j <= k) out.push_back(GBranch::coarse_right);
    }
    return out;
}

/// Evaluate one branch expression. All A/B indices are plain non-negative
/// integers inside each branch's domain; no modular reduction happens here.
inline Int branch_numerator(int N, int nu, int j, int k, GBranch br) {
    const auto A = [](int i) { return hyperbolic_a(i); };
    const auto B = [](int i) { return hyperbolic_b(i); };
    const int s = sign_pow(N);
    const int v2 = 2 * nu;
    const auto half = [](Int x) {
        if ((x & 1) != 0) throw std::logic_error("branch_numerator: odd halved term");
        return x / 2;
    };
    switch (br) {
        case GBranch::fine_left:
            return 2 * s * B(j - k) + B(N - j + k) + B(v2 - j) * A(N - v2 + k) +
                   B(k) * (A(N - j) + 3 * B(v2 - j) * B(N - v2));
        case GBranch::fine_mid:
            return 2 * s * B(k - j) + B(N - k + j) + B(v2 - k) * A(N - v2 + j) +
                   B(j) * (A(N - k) + 3 * B(v2 - k) * B(N - v2));
        case GBranch::fine_right:
            return s * (B(k - j) + A(k - v2) * B(v2 - j)) + B(N - k + j) + B(j) * A(N - k);
        case GBranch::coarse_left:
            return s * (B(j - k) + A(j - v2) * B(v2 - k)) + B(N - j + k) + A(N - j) * B(k);
        case GBranch::coarse_mid:
            return s * B(j - k) + A(k - v2) * B(N - j + v2) + A(N - j) * B(k) +
                   half(3 * B(k - v2) * B(v2) * B(N - j));
        case GBranch::coarse_right:
            return s * B(k - j) + A(N - k) * B(j) + A(j - v2) * B(N - k + v2) +
                   half(3 * B(v2) * B(N - k) * B(j - v2));
    }
    throw std::logic_error("branch_numerator: unknown branch");
}

/// g(N, nu, j, k) via the first applicable branch.
inline Int inverse_numerator(int N, int nu, int j, int k) {
    return branch_numerator(N, nu, j, k, applicable_branches(N, nu, j, k).front());
}

/// One row of the exact inverse Gram matrix: integer numerators g_k with a
/// shared denominator, reconstructed as
///   a_{j,k} = scale * (-1)^{j+k} * g_k / denom.
struct InverseRow {
    int N{};
    int nu{};  // 0 after canonicalization for equally spaced configs
    int j{};
    std::vector<Int> g;
    Rat denom;
    Rat scale;  // 6n

    Rat entry(int k) const {
        k = mod_index(k, N);
        return scale * sign_pow(j + k) * Rat(g[k]) / denom;
    }

    std::vector<Rat> values() const {
        std::vector<Rat> out;
        out.reserve(N);
        for (int k = 0; k < N; ++k) out.push_back(entry(k));
        return out;
    }
};

/// Row j of the inverse Gram matrix for the special knot set of cfg.
/// Equally spaced configs use the shift-invariant closed form; otherwise
/// the six-branch formula applies entrywise.
inline InverseRow inverse_row(const KnotConfig& cfg, int j) {
    const KnotConfig c = cfg.canonical();
    const int N = c.points();
    if (j < 0 || j >= N) throw std::domain_error("inverse_row: row index out of range");
    InverseRow row;
    row.N = N;
    row.nu = c.nu;
    row.j = j;
    row.g.reserve(N);
    if (c.nu == 0) {
        row.denom = Rat(equal_knot_denominator(N));
        row.scale = Rat(6 * N);
        // Row j is row 0 shifted by j. Fold the parity of the shifted index
        // into g so that entry() keeps the (-1)^{j+k} reconstruction.
        for (int k = 0; k < N; ++k) {
            const int m = mod_index(k - j, N);
            const int sign = sign_pow(static_cast<long long>(m) + j + k);
            row.g.push_back(sign * equal_knot_numerator(N, m));
        }
    } else {
        row.denom = Rat(inverse_denominator_int(N, c.nu));
        row.scale = Rat(6 * c.n);
        for (int k = 0; k < N; ++k) row.g.push_back(inverse_numerator(N, c.nu, j, k));
    }
    return row;
}

}  // namespace franklin
