#pragma once

#include <stdexcept>

#include "franklin/rational.hpp"

namespace franklin {

/// Element p + q*sqrt(3) of the quadratic field Q(sqrt(3)), with exact
/// rational components. Comparison against zero is decided by rational
/// case analysis, never by floating point.
struct QuadraticRational {
    Rat p{};  // rational part
    Rat q{};  // coefficient of sqrt(3)

    QuadraticRational() = default;
    QuadraticRational(Rat rational_part) : p(std::move(rational_part)) {}
    QuadraticRational(Rat rational_part, Rat surd_part)
        : p(std::move(rational_part)), q(std::move(surd_part)) {}
    QuadraticRational(int v) : p(v) {}

    bool is_rational() const { return q == 0; }

    /// Exact sign: p + q*sqrt(3) > 0  iff
    ///   (p >= 0 and q >= 0, not both zero), or
    ///   (p >= 0 > q and p^2 > 3q^2), or
    ///   (q >= 0 > p and 3q^2 > p^2).
    int sign() const {
        const int sp = p.sign();
        const int sq = q.sign();
        if (sp == 0 && sq == 0) return 0;
        if (sp >= 0 && sq >= 0) return 1;
        if (sp <= 0 && sq <= 0) return -1;
        const Rat pp = p * p;
        const Rat qq3 = 3 * q * q;
        if (pp == qq3) throw std::logic_error("QuadraticRational: p^2 == 3q^2 with q != 0");
        const bool rational_dominates = pp > qq3;
        return sp > 0 ? (rational_dominates ? 1 : -1) : (rational_dominates ? -1 : 1);
    }

    QuadraticRational conjugate() const { return {p, -q}; }

    /// Multiplicative inverse; the field norm p^2 - 3q^2 vanishes only at 0.
    QuadraticRational inverse() const {
        const Rat norm = p * p - 3 * q * q;
        if (norm == 0) throw std::domain_error("QuadraticRational: inverse of zero");
        return {p / norm, -q / norm};
    }

    /// Rational approximation with error at most |q| * 10^-digits.
    Rat approx(int digits) const { return p + q * sqrt3_lower(digits); }
};

inline QuadraticRational operator+(const QuadraticRational& a, const QuadraticRational& b) {
    return {a.p + b.p, a.q + b.q};
}
inline QuadraticRational operator-(const QuadraticRational& a, const QuadraticRational& b) {
    return {a.p - b.p, a.q - b.q};
}
inline QuadraticRational operator-(const QuadraticRational& a) { return {-a.p, -a.q}; }
inline QuadraticRational operator*(const QuadraticRational& a, const QuadraticRational& b) {
    return {a.p * b.p + 3 * a.q * b.q, a.p * b.q + a.q * b.p};
}
inline QuadraticRational operator/(const QuadraticRational& a, const QuadraticRational& b) {
    return a * b.inverse();
}
inline bool operator==(const QuadraticRational& a, const QuadraticRational& b) {
    return a.p == b.p && a.q == b.q;
}
inline bool operator!=(const QuadraticRational& a, const QuadraticRational& b) {
    return !(a == b);
}
inline bool operator<(const QuadraticRational& a, const QuadraticRational& b) {
    return (a - b).sign() < 0;
}
inline bool operator>(const QuadraticRational& a, const QuadraticRational& b) { return b < a; }
inline bool operator<=(const QuadraticRational& a, const QuadraticRational& b) { return !(b < a); }
inline bool operator>=(const QuadraticRational& a, const QuadraticRational& b) { return !(a < b); }

inline QuadraticRational sqrt3_value() { return {Rat(0), Rat(1)}; }

/// lambda = 2 + sqrt(3), the dominant root of t^2 - 4t + 1 = 0.
inline QuadraticRational lambda_value() { return {Rat(2), Rat(1)}; }

/// lambda^-1 = 2 - sqrt(3).
inline QuadraticRational lambda_inverse_value() { return {Rat(2), Rat(-1)}; }

/// gamma = 2 + (33 - 18*sqrt(3))/13, the certified norm bound.
inline QuadraticRational gamma_value() { return {Rat(59, 13), Rat(-18, 13)}; }

}  // namespace franklin
