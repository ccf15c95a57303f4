#include <doctest.h>

#include <cmath>

#include "exptrio/errors.hpp"
#include "exptrio/rng.hpp"
#include "exptrio/series.hpp"

using namespace exptrio;

namespace {

RationalSeries unit_series(std::size_t order) {
    RationalSeries u(order);
    u[0] = 1;
    return u;
}

}  // namespace

TEST_CASE("cauchy product: (1+t)^2") {
    RationalSeries a(4);
    a[0] = 1;
    a[1] = 1;
    const RationalSeries c = cauchy_product(a, a, Rational(1), Rational(1));
    CHECK(c[0] == 1);
    CHECK(c[1] == 2);
    CHECK(c[2] == 1);
    CHECK(c[3] == 0);
}

TEST_CASE("cauchy product with scaled arguments: (1+t)(1+t/2)") {
    RationalSeries a(3);
    a[0] = 1;
    a[1] = 1;
    const RationalSeries c = cauchy_product(a, a, Rational(1), Rational(2));
    CHECK(c[1] == Rational(3, 2));
    CHECK(c[2] == Rational(1, 2));
}

TEST_CASE("cauchy product with the unit series rescales by q powers") {
    RationalSeries b(3);
    b[0] = 2;
    b[1] = 5;
    b[2] = -7;
    b[3] = 1;
    const RationalSeries c = cauchy_product(unit_series(3), b, Rational(3), Rational(2));
    for (std::size_t k = 0; k <= 3; ++k) {
        Rational q_pow = 1;
        for (std::size_t i = 0; i < k; ++i) q_pow *= 2;
        CHECK(c[k] == b[k] / q_pow);
    }
}

TEST_CASE("cauchy product preconditions") {
    CHECK_THROWS_AS(cauchy_product(unit_series(2), unit_series(3), Rational(1), Rational(1)),
                    ParameterError);
    CHECK_THROWS_AS(cauchy_product(unit_series(2), unit_series(2), Rational(0), Rational(1)),
                    ParameterError);
}

TEST_CASE("reciprocal of the geometric alternating series") {
    // phi = 1/(1+t) = 1 - t + t^2 - ... inverts to 1 + t
    RationalSeries phi(6);
    for (std::size_t k = 0; k <= 6; ++k) phi[k] = (k % 2 == 0) ? 1 : -1;
    const RationalSeries alpha = reciprocal_series(phi);
    CHECK(alpha[0] == 1);
    CHECK(alpha[1] == 1);
    for (std::size_t k = 2; k <= 6; ++k) CHECK(alpha[k] == 0);
}

TEST_CASE("reciprocal of one is one; zero constant term is rejected") {
    const RationalSeries alpha = reciprocal_series(unit_series(4));
    CHECK(alpha == unit_series(4));

    RationalSeries bad(3);
    bad[1] = 1;
    CHECK_THROWS_AS(reciprocal_series(bad), DomainError);
}

TEST_CASE("reciprocal multiplied back gives the unit series (randomized)") {
    SplitMix64 gen(314);
    for (int trial = 0; trial < 25; ++trial) {
        RationalSeries phi(8);
        phi[0] = Rational(1 + static_cast<long>(gen.next_below(9)),
                          1 + static_cast<long>(gen.next_below(7)));
        for (std::size_t k = 1; k <= 8; ++k)
            phi[k] = Rational(static_cast<long>(gen.next_below(19)) - 9,
                              1 + static_cast<long>(gen.next_below(11)));
        const RationalSeries alpha = reciprocal_series(phi);
        const RationalSeries product = cauchy_product(alpha, phi, Rational(1), Rational(1));
        CHECK(product == unit_series(8));
    }
}

TEST_CASE("laplace-product recursion forces a linear solution") {
    for (const Rational& lambda : {Rational(1), Rational(7, 3)}) {
        const RationalSeries a = solve_laplace_product_recursion(lambda, 10);
        CHECK(a[0] == 1);
        CHECK(a[1] == lambda);
        for (std::size_t k = 2; k <= 10; ++k) {
            CAPTURE(k);
            CHECK(a[k] == 0);
        }
        // every equation of the recursion is satisfied by the solution
        for (std::size_t k = 1; k <= 10; ++k) CHECK(laplace_product_equation(a, k) == 0);
    }
}

TEST_CASE("the k=1 recursion equation vanishes for any linear coefficient") {
    for (long num : {1L, 5L, -3L, 17L}) {
        RationalSeries a(2);
        a[0] = 1;
        a[1] = Rational(num, 4);
        CHECK(laplace_product_equation(a, 1) == 0);
    }
}

TEST_CASE("cdf-cubic recursion reproduces alternating inverse factorials") {
    const RationalSeries c = solve_cdf_cubic_recursion(Rational(1), 12);
    CHECK(c[0] == 0);
    CHECK(c[2] == Rational(-1, 2));
    for (std::size_t k = 1; k <= 12; ++k) {
        const Rational expected = (k % 2 == 1 ? Rational(1) : Rational(-1))
                                / Rational(factorial_exact(static_cast<long>(k)));
        CAPTURE(k);
        CHECK(c[k] == expected);
    }
    // signs alternate and magnitudes are exactly 1/k!
    for (std::size_t k = 2; k <= 12; ++k) CHECK(c[k] * c[k - 1] < 0);

    // the solved coefficients satisfy each original equation
    for (std::size_t k = 2; k <= 11; ++k) CHECK(cdf_cubic_equation(c, k) == 0);
}

TEST_CASE("cdf-cubic recursion with general delta") {
    // c_k = (-1)^(k-1) delta^(2k-1) / k!
    const Rational delta(3, 2);
    const RationalSeries c = solve_cdf_cubic_recursion(delta, 8);
    for (std::size_t k = 1; k <= 8; ++k) {
        Rational expected = (k % 2 == 1 ? Rational(1) : Rational(-1));
        for (std::size_t i = 0; i < 2 * k - 1; ++i) expected *= delta;
        expected /= Rational(factorial_exact(static_cast<long>(k)));
        CHECK(c[k] == expected);
    }
}

TEST_CASE("cdf-cubic recursion at delta = 0 stays at zero") {
    const RationalSeries c = solve_cdf_cubic_recursion(Rational(0), 10);
    for (std::size_t k = 0; k <= 10; ++k) CHECK(c[k] == 0);
}

TEST_CASE("partial sums of the solved cdf series converge to 1 - exp(-x)") {
    const RationalSeries c = solve_cdf_cubic_recursion(Rational(1), 30);
    for (double x : {0.5, 1.0, 2.0}) {
        double acc = 0.0;
        double x_pow = 1.0;
        for (std::size_t k = 1; k <= 30; ++k) {
            x_pow *= x;
            acc += c[k].convert_to<double>() * x_pow;
        }
        CHECK(std::abs(acc - (1.0 - std::exp(-x))) < 1e-10);
    }
}

TEST_CASE("factorial-sum identity at small k (hand values)") {
    const IdentityWitness w1 = factorial_sum_identity(1);
    CHECK(w1.holds);
    CHECK(w1.lhs == 1);
    CHECK(w1.rhs == Rational(9 - 8 + 1, 2));

    const IdentityWitness w2 = factorial_sum_identity(2);
    CHECK(w2.holds);
    CHECK(w2.lhs == 2);
}

TEST_CASE("factorial-sum identity holds through k = 40") {
    for (long k = 1; k <= 40; ++k) {
        CAPTURE(k);
        CHECK(factorial_sum_identity(k).holds);
    }
    CHECK_THROWS_AS(factorial_sum_identity(0), ParameterError);
}

TEST_CASE("binomial identities at n = 4 (hand values)") {
    const IdentityWitness a = binomial_identity_a(4);
    CHECK(a.holds);
    CHECK(a.lhs == 3);  // 9 - 6
    const IdentityWitness b = binomial_identity_b(4);
    CHECK(b.holds);
    CHECK(b.lhs == -5);  // 1 - 6
    CHECK_THROWS_AS(binomial_identity_a(3), ParameterError);
}

TEST_CASE("binomial identities hold for n = 4..64") {
    for (long n = 4; n <= 64; ++n) {
        CAPTURE(n);
        CHECK(binomial_identity_a(n).holds);
        CHECK(binomial_identity_b(n).holds);
    }
}

TEST_CASE("laplace product identity in exact rationals") {
    const IdentityWitness w = laplace_identity_check(Rational(1), Rational(1));
    CHECK(w.holds);
    CHECK(w.lhs == Rational(1, 4));  // (1/2)(2/3)(3/4)

    CHECK(laplace_identity_check(Rational(1), Rational(0)).lhs == 1);
    CHECK(laplace_identity_check(Rational(5, 2), Rational(3, 7)).holds);
}

TEST_CASE("derivative identities hold under the exponential ansatz") {
    for (long n : {4L, 10L}) {
        const auto witnesses = derivative_identity_check(n);
        CHECK(witnesses[0].holds);
        CHECK(witnesses[1].holds);
    }
    // boundary case: both routes still balance at n = 3
    const auto degenerate = derivative_identity_check(3);
    CHECK(degenerate[0].lhs == degenerate[0].rhs);
    CHECK(degenerate[1].lhs == degenerate[1].rhs);
    // lambda drops out of the balance
    CHECK(derivative_identity_check(7, Rational(5, 7))[0].holds);
    CHECK(derivative_identity_check(7, Rational(5, 7))[1].holds);
}

TEST_CASE("exact binomial and factorial helpers") {
    CHECK(binomial_exact(10, 3) == 120);
    CHECK(binomial_exact(5, 0) == 1);
    CHECK(binomial_exact(5, 6) == 0);
    CHECK(factorial_exact(0) == 1);
    CHECK(factorial_exact(5) == 120);
    // C(60,30) needs more than 53 bits; exact integers keep it
    CHECK(binomial_exact(60, 30) == BigInt("118264581564861424"));
}
