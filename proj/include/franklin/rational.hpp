#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace franklin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// (-1)^e for a non-negative exponent.
inline int sign_pow(long long e) { return (e & 1) ? -1 : 1; }

/// Reduce an index into 0..n-1. The only place index wraparound happens.
inline int mod_index(long long i, int n) {
    int m = static_cast<int>(i % n);
    return m < 0 ? m + n : m;
}

inline Int pow10(int d) {
    if (d < 0) throw std::invalid_argument("pow10: negative exponent");
    Int r = 1;
    for (int i = 0; i < d; ++i) r *= 10;
    return r;
}

inline Int floor_to_int(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

enum class Rounding { half_even, half_away };

/// Fixed-point decimal rendering of an exact rational, e.g. "2.14023316".
inline std::string decimal_string(const Rat& x, int digits,
                                  Rounding mode = Rounding::half_even) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digits");
    Int n = numerator(x);
    Int d = denominator(x);
    const bool neg = n < 0;
    if (neg) n = -n;
    const Int scale = pow10(digits);
    n *= scale;
    Int q = n / d;
    const Int r = n % d;
    const Int twice = 2 * r;
    if (twice > d) {
        ++q;
    } else if (twice == d) {
        if (mode == Rounding::half_away || (q & 1) != 0) ++q;
    }
    const Int ip = q / scale;
    const Int fp = q % scale;
    std::string frac = fp.str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out;
    if (neg && q != 0) out += '-';
    out += ip.str();
    if (digits > 0) {
        out += '.';
        out += frac;
    }
    return out;
}

/// Scientific rendering with `sig` significant digits, e.g. "2.957929e-01".
inline std::string scientific_string(const Rat& x, int sig) {
    if (sig < 1) throw std::invalid_argument("scientific_string: sig < 1");
    if (x == 0) return "0";
    const Rat ax = abs(x);
    const Int n = numerator(ax);
    const Int d = denominator(ax);
    long e = static_cast<long>(n.str().size()) - static_cast<long>(d.str().size());
    // sign of ax - 10^ee
    const auto cmp_pow = [&](long ee) {
        if (ee >= 0) {
            const Int rhs = d * pow10(static_cast<int>(ee));
            return n < rhs ? -1 : (n == rhs ? 0 : 1);
        }
        const Int lhs = n * pow10(static_cast<int>(-ee));
        return lhs < d ? -1 : (lhs == d ? 0 : 1);
    };
    while (cmp_pow(e) < 0) --e;
    while (cmp_pow(e + 1) >= 0) ++e;
    const long shift = sig - 1 - e;
    Int sn = n, sd = d;
    if (shift >= 0)
        sn *= pow10(static_cast<int>(shift));
    else
        sd *= pow10(static_cast<int>(-shift));
    Int q = sn / sd;
    const Int r = sn % sd;
    if (2 * r > sd || (2 * r == sd && (q & 1) != 0)) ++q;
    if (q == pow10(sig)) {
        q /= 10;
        ++e;
    }
    const std::string m = q.str();
    std::string out = x < 0 ? "-" : "";
    out += m[0];
    if (sig > 1) {
        out += '.';
        out += m.substr(1);
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    out += buf;
    return out;
}

/// Rational lower bound for sqrt(3) accurate to `digits` decimal places.
inline Rat sqrt3_lower(int digits) {
    const Int s = pow10(digits);
    const Int radicand = 3 * s * s;
    return Rat(boost::multiprecision::sqrt(radicand), s);
}

/// Rational upper bound for sqrt(3) accurate to `digits` decimal places.
inline Rat sqrt3_upper(int digits) {
    const Int s = pow10(digits);
    const Int radicand = 3 * s * s;
    return Rat(Int(boost::multiprecision::sqrt(radicand) + 1), s);
}

}  // namespace franklin
