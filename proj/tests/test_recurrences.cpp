#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "franklin/recurrences.hpp"

using namespace franklin;

TEST_CASE("hyperbolic sequence base values") {
    const auto seq = hyperbolic_sequence(4);
    REQUIRE(seq.size() == 5);
    const long expect_a[] = {1, 2, 7, 26, 97};
    const long expect_b[] = {0, 1, 4, 15, 56};
    for (int k = 0; k <= 4; ++k) {
        CHECK(seq[k].index == k);
        CHECK(seq[k].a == expect_a[k]);
        CHECK(seq[k].b == expect_b[k]);
    }
    const auto single = hyperbolic_sequence(0);
    REQUIRE(single.size() == 1);
    CHECK(single[0].a == 1);
    CHECK(single[0].b == 0);
}

TEST_CASE("recurrence and Pell invariant along the sequence") {
    const auto seq = hyperbolic_sequence(200);
    for (int k = 0; k + 1 <= 200; ++k) {
        CHECK(seq[k + 1].a == 2 * seq[k].a + 3 * seq[k].b);
        CHECK(seq[k + 1].b == seq[k].a + 2 * seq[k].b);
        // downward recurrences
        CHECK(seq[k].a == 2 * seq[k + 1].a - 3 * seq[k + 1].b);
        CHECK(seq[k].b == 2 * seq[k + 1].b - seq[k + 1].a);
    }
    for (const auto& p : seq) {
        CHECK(p.a * p.a - 3 * p.b * p.b == 1);
        CHECK(p.a > 0);
        if (p.index >= 1) CHECK(p.b > 0);
    }
}

TEST_CASE("index 10 matches the lambda power formula in floating point") {
    const auto p = hyperbolic_pair(10);
    CHECK(p.a * p.a - 3 * p.b * p.b == 1);
    const long double lam = 2.0L + std::sqrt(3.0L);
    const long double pow10 = std::pow(lam, 10);
    const long double a10 = (pow10 + 1.0L / pow10) / 2.0L;
    const long double b10 = (pow10 - 1.0L / pow10) / (2.0L * std::sqrt(3.0L));
    CHECK(std::abs(static_cast<long double>(p.a) - a10) / a10 < 1e-15L);
    CHECK(std::abs(static_cast<long double>(p.b) - b10) / b10 < 1e-15L);
}

TEST_CASE("phi rational values") {
    CHECK(phi(Rat(4)) == Rat(17, 25));
    CHECK(phi(Rat(6)) == Rat(37, 49));
    CHECK(phi(Rat(1)) == Rat(1, 2));
    CHECK_THROWS_AS(phi(Rat(0)), std::domain_error);
    CHECK_THROWS_AS(phi(Rat(-3, 7)), std::domain_error);
}

TEST_CASE("phi at lambda and its derivative") {
    CHECK(phi_at_lambda() == QuadraticRational(Rat(2, 3)));
    CHECK(phi_q(lambda_inverse_value()) == QuadraticRational(Rat(2, 3)));
    // phi'(lambda) = lambda^-1 / (3 sqrt(3)) = (2 sqrt(3) - 3)/9
    CHECK(phi_prime_q(lambda_value()) == QuadraticRational(Rat(-1, 3), Rat(2, 9)));
    const QuadraticRational expect = lambda_inverse_value() / (QuadraticRational(3) * sqrt3_value());
    CHECK(phi_prime_q(lambda_value()) == expect);
}

TEST_CASE("phi symmetry and range on random rationals") {
    std::mt19937_64 rng(20240717);
    std::uniform_int_distribution<long> num(1, 5000);
    std::uniform_int_distribution<long> den(1, 500);
    for (int i = 0; i < 50; ++i) {
        const Rat t(num(rng), den(rng));
        CHECK(phi(t) == phi(1 / t));
        CHECK(phi(t) >= Rat(1, 2));
        CHECK(phi(t) < 1);
        // phi(t) < phi(lambda) = 2/3 exactly when lambda^-1 < t < lambda
        const QuadraticRational qt(t);
        if (lambda_inverse_value() < qt && qt < lambda_value()) CHECK(phi(t) < Rat(2, 3));
    }
}

TEST_CASE("sum identities") {
    CHECK(check_sum_identities(0));
    CHECK(check_sum_identities(20));
    CHECK(check_sum_identities(100));
    // base case by hand: B_0 + B_1 = 1 = A_1 - 1
    CHECK(hyperbolic_b(0) + hyperbolic_b(1) == hyperbolic_a(1) - 1);
}

TEST_CASE("asymptotic and index-addition identities") {
    CHECK(check_asym_identities(1));
    CHECK(check_asym_identities(30));
    // B_1 A_0 + A_1 B_0 = 1 = B_1
    CHECK(hyperbolic_b(1) * hyperbolic_a(0) + hyperbolic_a(1) * hyperbolic_b(0) == 1);
    // A_2 A_3 + 3 B_3 B_2 = 7*26 + 3*15*4 = 362 = A_5
    CHECK(hyperbolic_a(2) * hyperbolic_a(3) + 3 * hyperbolic_b(3) * hyperbolic_b(2) == 362);
    CHECK(hyperbolic_a(5) == 362);
}

TEST_CASE("lambda negative powers are exact") {
    // lambda^k * (A_k - sqrt(3) B_k) == 1
    QuadraticRational power(1);
    for (int k = 0; k <= 40; ++k) {
        CHECK(power * lambda_power_negative(k) == QuadraticRational(1));
        power = power * lambda_value();
    }
}

TEST_CASE("quadratic field arithmetic") {
    CHECK(lambda_value() * lambda_inverse_value() == QuadraticRational(1));
    CHECK(lambda_value().inverse() == lambda_inverse_value());
    CHECK(sqrt3_value() * sqrt3_value() == QuadraticRational(3));
    CHECK_THROWS_AS(QuadraticRational(0).inverse(), std::domain_error);
    // gamma = 2 + (33 - 18 sqrt(3))/13 lies strictly between 2 and 3
    CHECK(gamma_value() > QuadraticRational(2));
    CHECK(gamma_value() < QuadraticRational(3));
}

TEST_CASE("quadratic sign agrees with 100-digit decimal evaluation") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> coef(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 997);
    const Rat lo = sqrt3_lower(100);
    const Rat hi = sqrt3_upper(100);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 100; ++i) {
        const QuadraticRational x{Rat(coef(rng), den(rng)), Rat(coef(rng), den(rng))};
        const Rat a = x.p + x.q * lo;
        const Rat b = x.p + x.q * hi;
        // skip the (never observed) case where the bracket straddles zero
        if (a.sign() != b.sign()) continue;
        ++checked;
        CHECK(x.sign() == a.sign());
    }
    CHECK(checked == 100);
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(Rat(5, 3), 8) == "1.66666667");
    CHECK(decimal_string(Rat(2), 8) == "2.00000000");
    CHECK(decimal_string(Rat(83, 45), 8) == "1.84444444");
    CHECK(decimal_string(Rat(16, 9), 8) == "1.77777778");
    // ties: 0.125 at two digits rounds to even (0.12), away mode to 0.13
    CHECK(decimal_string(Rat(1, 8), 2, Rounding::half_even) == "0.12");
    CHECK(decimal_string(Rat(1, 8), 2, Rounding::half_away) == "0.13");
    CHECK(decimal_string(Rat(3, 8), 2, Rounding::half_even) == "0.38");
    CHECK(decimal_string(Rat(-5, 3), 4) == "-1.6667");
    CHECK(scientific_string(Rat(1, 3), 4) == "3.333e-01");
    CHECK(scientific_string(Rat(999999, 1000), 3) == "1.00e+03");
    CHECK(scientific_string(Rat(-1, 128), 3) == "-7.81e-03");
}

TEST_CASE("sqrt3 brackets") {
    const Rat lo = sqrt3_lower(30);
    const Rat hi = sqrt3_upper(30);
    CHECK(lo < hi);
    CHECK(lo * lo < 3);
    CHECK(hi * hi > 3);
    CHECK(hi - lo == Rat(1, pow10(30)));
}
