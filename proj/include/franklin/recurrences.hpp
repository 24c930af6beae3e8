#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "franklin/quadratic.hpp"
#include "franklin/rational.hpp"

namespace franklin {

/// Integer solutions of f_{k-1} - 4 f_k + f_{k+1} = 0:
///   A_{k+1} = 2 A_k + 3 B_k,  A_0 = 1,
///   B_{k+1} = A_k + 2 B_k,    B_0 = 0.
/// Equivalently A_k = (lambda^k + lambda^-k)/2 and
/// B_k = (lambda^k - lambda^-k)/(2 sqrt(3)) with lambda = 2 + sqrt(3),
/// so A_k^2 - 3 B_k^2 = 1 for every k.
struct HyperbolicPair {
    int index{};
    Int a;
    Int b;
};

/// Memoized lookup of (A_k, B_k). The cache is per-thread, so concurrent
/// callers never contend or observe reallocation.
inline HyperbolicPair hyperbolic_pair(int k) {
    if (k < 0) throw std::domain_error("hyperbolic_pair: negative index");
    thread_local std::vector<Int> A{1};
    thread_local std::vector<Int> B{0};
    while (static_cast<int>(A.size()) <= k) {
        const size_t m = A.size() - 1;
        A.push_back(2 * A[m] + 3 * B[m]);
        B.push_back(A[m] + 2 * B[m]);
    }
    return {k, A[k], B[k]};
}

inline Int hyperbolic_a(int k) { return hyperbolic_pair(k).a; }
inline Int hyperbolic_b(int k) { return hyperbolic_pair(k).b; }

/// The pairs (A_0, B_0) .. (A_K, B_K), computed by direct recurrence.
inline std::vector<HyperbolicPair> hyperbolic_sequence(int K) {
    if (K < 0) throw std::domain_error("hyperbolic_sequence: negative length");
    std::vector<HyperbolicPair> out;
    out.reserve(static_cast<size_t>(K) + 1);
    out.push_back({0, Int(1), Int(0)});
    for (int k = 1; k <= K; ++k) {
        const auto& prev = out.back();
        out.push_back({k, 2 * prev.a + 3 * prev.b, prev.a + 2 * prev.b});
    }
    return out;
}

/// lambda^-k represented exactly as A_k - sqrt(3) B_k.
inline QuadraticRational lambda_power_negative(int k) {
    const auto p = hyperbolic_pair(k);
    return {Rat(p.a), Rat(-p.b)};
}

/// phi(t) = (1 + t^2) / (1 + t)^2 on (0, infinity); range [1/2, 1).
inline Rat phi(const Rat& t) {
    if (t <= 0) throw std::domain_error("phi: argument must be positive");
    const Rat one_plus = 1 + t;
    return (1 + t * t) / (one_plus * one_plus);
}

inline QuadraticRational phi_q(const QuadraticRational& t) {
    if (t.sign() <= 0) throw std::domain_error("phi_q: argument must be positive");
    const QuadraticRational one_plus = QuadraticRational(1) + t;
    return (QuadraticRational(1) + t * t) / (one_plus * one_plus);
}

/// phi'(t) = 2 (t - 1) / (1 + t)^3.
inline QuadraticRational phi_prime_q(const QuadraticRational& t) {
    const QuadraticRational one_plus = QuadraticRational(1) + t;
    return (QuadraticRational(2) * (t - QuadraticRational(1))) /
           (one_plus * one_plus * one_plus);
}

/// phi evaluated at lambda = 2 + sqrt(3); simplifies to exactly 2/3.
inline QuadraticRational phi_at_lambda() { return phi_q(lambda_value()); }

namespace detail {

/// First failure (if any) of the four prefix-sum identities
///   sum_{k<=K'} (B_k + B_{k+1}) = A_{K'+1} - 1,
///   2 sum_{k<=K'} A_k = 3 B_{K'+1} - A_{K'+1} + 1,
///   sum_{k<=K'} (A_k + A_{k+1}) = 3 B_{K'+1},
///   2 sum_{k<=K'} B_k = A_{K'+1} - B_{K'+1} - 1
/// over all prefixes K' <= K.
inline std::optional<std::string> first_sum_identity_failure(int K) {
    const auto seq = hyperbolic_sequence(K + 1);
    Int sum_bb = 0, sum_a = 0, sum_aa = 0, sum_b = 0;
    for (int k = 0; k <= K; ++k) {
        sum_bb += seq[k].b + seq[k + 1].b;
        sum_a += seq[k].a;
        sum_aa += seq[k].a + seq[k + 1].a;
        sum_b += seq[k].b;
        const Int& a1 = seq[k + 1].a;
        const Int& b1 = seq[k + 1].b;
        std::string which;
        if (sum_bb != a1 - 1) which = "sum(B_k+B_{k+1})";
        else if (2 * sum_a != 3 * b1 - a1 + 1) which = "2*sum(A_k)";
        else if (sum_aa != 3 * b1) which = "sum(A_k+A_{k+1})";
        else if (2 * sum_b != a1 - b1 - 1) which = "2*sum(B_k)";
        if (!which.empty()) {
            std::ostringstream os;
            os << which << " identity fails at K=" << k;
            return os.str();
        }
    }
    return std::nullopt;
}

/// First failure (if any) of the Pell invariant, the exact lambda-power
/// identities, the growth bounds A_{k+1} <= 4 A_k / B_{k+1} <= 4 B_k, and
/// the index-addition identities
///   B_k A_{n-k} + A_k B_{n-k} = B_n,   B_n A_{n-k} - B_{n-k} A_n = B_k,
///   A_k A_{n-k} + 3 B_{n-k} B_k = A_n, A_n A_{n-k} - 3 B_n B_{n-k} = A_k.
inline std::optional<std::string> first_asym_identity_failure(int K) {
    const auto seq = hyperbolic_sequence(K + 1);
    const auto fail = [](const std::string& what, int k, int n = -1) {
        std::ostringstream os;
        os << what << " fails at k=" << k;
        if (n >= 0) os << ", n=" << n;
        return os.str();
    };
    for (int k = 0; k <= K; ++k) {
        const Int& a = seq[k].a;
        const Int& b = seq[k].b;
        const Int& a1 = seq[k + 1].a;
        const Int& b1 = seq[k + 1].b;
        if (a * a - 3 * b * b != 1) return fail("A_k^2 - 3 B_k^2 = 1", k);
        // lambda^-k = A_k - sqrt(3) B_k; all three identities are exact in
        // Q(sqrt(3)), as are the enclosing ranges.
        const QuadraticRational lam_neg{Rat(a), Rat(-b)};
        const QuadraticRational lhs1{Rat(2 * b - b1), Rat(b)};   // lambda B_k - B_{k+1}
        const QuadraticRational lhs2{Rat(2 * a - a1), Rat(a)};   // lambda A_k - A_{k+1}
        const QuadraticRational lhs3{Rat(-a), Rat(b)};           // sqrt(3) B_k - A_k
        if (lhs1 != -lam_neg) return fail("lambda B_k - B_{k+1} = -lambda^-k", k);
        if (lhs2 != sqrt3_value() * lam_neg) return fail("lambda A_k - A_{k+1} = sqrt(3) lambda^-k", k);
        if (lhs3 != -lam_neg) return fail("sqrt(3) B_k - A_k = -lambda^-k", k);
        if (lam_neg.sign() < 0 || (QuadraticRational(1) - lam_neg).sign() < 0)
            return fail("0 <= lambda^-k <= 1", k);
        if (a1 > 4 * a) return fail("A_{k+1} <= 4 A_k", k);
        if (k >= 1 && b1 > 4 * b) return fail("B_{k+1} <= 4 B_k", k);
    }
    for (int n = 0; n <= K; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Int& ak = seq[k].a;
            const Int& bk = seq[k].b;
            const Int& am = seq[n - k].a;
            const Int& bm = seq[n - k].b;
            const Int& an = seq[n].a;
            const Int& bn = seq[n].b;
            if (bk * am + ak * bm != bn) return fail("B_k A_{n-k} + A_k B_{n-k} = B_n", k, n);
            if (bn * am - bm * an != bk) return fail("B_n A_{n-k} - B_{n-k} A_n = B_k", k, n);
            if (ak * am + 3 * bm * bk != an) return fail("A_k A_{n-k} + 3 B_{n-k} B_k = A_n", k, n);
            if (an * am - 3 * bn * bm != ak) return fail("A_n A_{n-k} - 3 B_n B_{n-k} = A_k", k, n);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// True iff all four prefix-sum identities hold exactly for every K' <= K.
inline bool check_sum_identities(int K) {
    if (K < 0) throw std::domain_error("check_sum_identities: negative K");
    return !detail::first_sum_identity_failure(K).has_value();
}

/// True iff the lambda-power identities, growth bounds and index-addition
/// identities hold exactly for all indices up to K.
inline bool check_asym_identities(int K) {
    if (K < 0) throw std::domain_error("check_asym_identities: negative K");
    return !detail::first_asym_identity_failure(K).has_value();
}

}  // namespace franklin
