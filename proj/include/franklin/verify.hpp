#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "franklin/lebesgue.hpp"
#include "franklin/oracle.hpp"
#include "franklin/recurrences.hpp"
#include "franklin/reference_norms.hpp"

namespace franklin {

enum class VerifyLevel { quick, full };

struct CheckResult {
    std::string name;
    bool pass{};
    std::string detail;  // first counterexample when pass is false
};

namespace detail {

inline std::string at(int N, int nu, int j = -1, int k = -1) {
    std::ostringstream os;
    os << "N=" << N << " nu=" << nu;
    if (j >= 0) os << " j=" << j;
    if (k >= 0) os << " k=" << k;
    return os.str();
}

inline std::optional<std::string> scan_recurrence_identities(int K) {
    if (auto f = first_sum_identity_failure(K)) return f;
    if (auto f = first_asym_identity_failure(K)) return f;
    return std::nullopt;
}

inline std::optional<std::string> scan_phi_values() {
    if (phi(Rat(4)) != Rat(17, 25)) return std::string("phi(4) != 17/25");
    if (phi(Rat(6)) != Rat(37, 49)) return std::string("phi(6) != 37/49");
    if (phi(Rat(1)) != Rat(1, 2)) return std::string("phi(1) != 1/2");
    if (phi_at_lambda() != QuadraticRational(Rat(2, 3)))
        return std::string("phi(lambda) != 2/3");
    if (phi_q(lambda_inverse_value()) != QuadraticRational(Rat(2, 3)))
        return std::string("phi(lambda^-1) != 2/3");
    if (phi_prime_q(lambda_value()) != QuadraticRational(Rat(-1, 3), Rat(2, 9)))
        return std::string("phi'(lambda) != (2 sqrt(3) - 3)/9");
    return std::nullopt;
}

/// Closed-form rows against dense exact inversion, plus the two independent
/// absolute-integral routes, for every admissible configuration up to maxN.
inline std::optional<std::string> scan_inverse_oracle(int maxN) {
    for (int N = 2; N <= maxN; ++N) {
        for (int nu = 0; 2 * nu <= N - 1; ++nu) {
            const KnotConfig cfg(N - nu, nu);
            const KnotSequence ks = special_knots(cfg);
            const DenseMatrix inv = dense_inverse(gram_dense(gram_matrix(ks)));
            for (int j = 0; j < N; ++j) {
                const InverseRow row = inverse_row(cfg, j);
                for (int k = 0; k < N; ++k)
                    if (row.entry(k) != inv.at(j, k))
                        return "closed-form row differs from dense inverse at " + at(N, nu, j, k);
                if (kappa(row, ks) != abs_kernel_integral(j, inv, ks))
                    return "kappa differs from geometric integral at " + at(N, nu, j);
            }
        }
    }
    return std::nullopt;
}

/// Sign pattern of the numerators: N even => g_k >= 0 everywhere; N odd =>
/// g_k >= 0 for |k - j| <= (N-1)/2 and g_k <= 0 for |k - j| >= (N+1)/2.
inline std::optional<std::string> scan_sign_structure(int maxN) {
    for (int N = 3; N <= maxN; ++N)
        for (int nu = 1; 2 * nu <= N - 1; ++nu)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) {
                    const Int g = inverse_numerator(N, nu, j, k);
                    const int dist = k > j ? k - j : j - k;
                    const bool nonneg = (N % 2 == 0) || (2 * dist <= N - 1);
                    if (nonneg ? g < 0 : g > 0)
                        return "sign structure violated at " + at(N, nu, j, k) +
                               " (g=" + g.str() + ")";
                }
    return std::nullopt;
}

/// Every applicable branch expression agrees at the overlap columns.
inline std::optional<std::string> scan_branch_overlap(int maxN) {
    for (int N = 3; N <= maxN; ++N)
        for (int nu = 1; 2 * nu <= N - 1; ++nu)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) {
                    const auto branches = applicable_branches(N, nu, j, k);
                    const Int first = branch_numerator(N, nu, j, k, branches.front());
                    for (size_t i = 1; i < branches.size(); ++i)
                        if (branch_numerator(N, nu, j, k, branches[i]) != first)
                            return "branch expressions disagree at " + at(N, nu, j, k);
                }
    return std::nullopt;
}

inline std::optional<std::string> scan_quotient_bounds(int maxN) {
    for (int N = 3; N <= maxN; ++N)
        for (int nu = 1; 2 * nu <= N - 1; ++nu)
            for (int j = 0; j < N; ++j)
                if (!check_quotient_bounds(KnotConfig(N - nu, nu), j))
                    return "quotient bound violated at " + at(N, nu, j);
    return std::nullopt;
}

/// nu = 1, j = 1 row structure: g_2 = g_0, the three-case closed form, the
/// pair-sum identities, and the consecutive-ratio identities (half-index
/// ratios for N odd enter through the cross-multiplied form 3 B_m + A_m).
inline std::optional<std::string> scan_fine_band_row_identities(int maxN) {
    for (int N = 3; N <= maxN; ++N) {
        const int s = sign_pow(N);
        const int K = N - 1;
        const auto A = [](int i) { return hyperbolic_a(i); };
        const auto B = [](int i) { return hyperbolic_b(i); };
        std::vector<Int> g;
        g.reserve(N);
        for (int k = 0; k < N; ++k) g.push_back(inverse_numerator(N, 1, 1, k));
        // three-case display
        if (g[0] != 2 * (s + A(K) - B(K))) return "g_0 closed form fails at N=" + std::to_string(N);
        if (g[1] != 8 * B(K)) return "g_1 closed form fails at N=" + std::to_string(N);
        for (int k = 2; k < N; ++k)
            if (g[k] != 2 * (A(N - k) + B(N - k) + s * (A(k - 2) + B(k - 2))))
                return "g_k closed form fails at " + at(N, 1, 1, k);
        if (N >= 4 && g[2] != g[0]) return "g_2 != g_0 at N=" + std::to_string(N);
        if (Int(inverse_denominator_int(N, 1)) != 18 * B(K) - 2 * A(K) - 2 * s)
            return "denominator closed form fails at N=" + std::to_string(N);
        // pair sums
        if (abs(g[1]) + abs(g[2 % N]) != 2 * s + 6 * B(K) + 2 * A(K))
            return "|g_1|+|g_2| identity fails at N=" + std::to_string(N);
        for (int k = 2; k < N; ++k) {
            const bool middle = (N % 2 == 1) && (2 * k == N + 1);
            const Int pair = abs(g[k]) + abs(g[mod_index(k + 1, N)]);
            if (middle) {
                if (pair != 8 * B(K / 2))
                    return "middle pair sum != 8 B_{K/2} at " + at(N, 1, 1, k);
            } else {
                if (pair != 4 * abs(A(N - k) + s * A(k - 1)))
                    return "pair sum identity fails at " + at(N, 1, 1, k);
            }
        }
        // consecutive ratios, cross-multiplied
        for (int k = 2; k < N; ++k) {
            const Int& gk = g[k];
            const Int& gk1 = g[mod_index(k + 1, N)];
            if (N % 2 == 0) {
                const int m = std::abs(N / 2 - k);
                const int m1 = std::abs(N / 2 - k + 1);
                if (abs(gk1) * A(m1) != abs(gk) * A(m))
                    return "ratio identity (even) fails at " + at(N, 1, 1, k);
            } else {
                const int m = (std::abs(N - 2 * k) - 1) / 2;
                const int m1 = (std::abs(N - 2 * k + 2) - 1) / 2;
                const Int c = 3 * B(m) + A(m);
                const Int c1 = 3 * B(m1) + A(m1);
                if (abs(gk1) * c1 != abs(gk) * c)
                    return "ratio identity (odd) fails at " + at(N, 1, 1, k);
            }
        }
        if (N >= 4 && !kappa_decomposition_check(KnotConfig(N - 1, 1)))
            return "kappa decomposition fails at N=" + std::to_string(N);
    }
    return std::nullopt;
}

inline std::optional<std::string> scan_reference_norms() {
    for (const auto& ref : reference_norms) {
        const NormReport rep = projection_norm(KnotConfig(ref.N - ref.nu, ref.nu));
        if (rep.decimal != ref.decimal)
            return "norm at " + at(ref.N, ref.nu) + " is " + rep.decimal + ", reference " +
                   ref.decimal;
    }
    return std::nullopt;
}

inline std::optional<std::string> scan_gamma_certificate(int maxN) {
    for (int N = 2; N <= maxN; ++N)
        for (int nu = 0; 2 * nu <= N - 1; ++nu) {
            const NormReport rep = projection_norm(KnotConfig(N - nu, nu));
            if (!rep.below_gamma) return "norm not below gamma at " + at(N, nu);
            if (nu == 0 && !(rep.norm < 2)) return "equally spaced norm not below 2 at N=" +
                                                   std::to_string(N);
        }
    return std::nullopt;
}

}  // namespace detail

inline std::vector<CheckResult> run_verify(VerifyLevel level) {
    const bool full = level == VerifyLevel::full;
    const int ident_K = full ? 2000 : 200;
    const int oracle_N = full ? 40 : 20;
    const int gamma_N = full ? 60 : 30;
    std::vector<CheckResult> out;
    const auto add = [&out](const std::string& name, std::optional<std::string> fail) {
        out.push_back({name, !fail.has_value(), fail.value_or("")});
    };
    add("recurrence identities (K=" + std::to_string(ident_K) + ")",
        detail::scan_recurrence_identities(ident_K));
    add("phi special values", detail::scan_phi_values());
    add("inverse rows vs dense oracle (N<=" + std::to_string(oracle_N) + ")",
        detail::scan_inverse_oracle(oracle_N));
    add("numerator sign structure (N<=40)", detail::scan_sign_structure(40));
    add("branch overlap agreement (N<=40)", detail::scan_branch_overlap(40));
    add("quotient ratio bounds (N<=40)", detail::scan_quotient_bounds(40));
    add("fine-band row identities (N<=100)", detail::scan_fine_band_row_identities(100));
    add("reference norm table", detail::scan_reference_norms());
    add("gamma certificate (N<=" + std::to_string(gamma_N) + ")",
        detail::scan_gamma_certificate(gamma_N));
    return out;
}

}  // namespace franklin
