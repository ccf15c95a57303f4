#include "exptrio/series.hpp"

#include "exptrio/errors.hpp"

namespace exptrio {

namespace {

BigInt ipow(long base, long exp) {
    BigInt r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

Rational rpow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw DomainError("zero raised to a negative power");
        return Rational(1) / rpow(base, -exp);
    }
    Rational r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

// Weight of a_j a_{k-j} in the k-th coefficient equation of the triple
// Laplace product identity.
Rational laplace_weight(std::size_t j, std::size_t k) {
    const long kj = static_cast<long>(k - j);
    return Rational(1) / Rational(ipow(2, kj))
         - Rational(3) / Rational(ipow(3, kj))
         + Rational(3) / Rational(ipow(2, static_cast<long>(j)) * ipow(3, kj));
}

}  // namespace

RationalSeries::RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ParameterError("series needs at least the constant coefficient");
}

RationalSeries cauchy_product(const RationalSeries& a, const RationalSeries& b,
                              const Rational& p, const Rational& q) {
    if (a.order() != b.order()) throw ParameterError("cauchy_product: orders must match");
    if (p == 0 || q == 0) throw ParameterError("cauchy_product: p and q must be nonzero");
    const std::size_t order = a.order();
    RationalSeries c(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = 0;
        for (std::size_t j = 0; j <= k; ++j)
            acc += a[j] * b[k - j] / (rpow(p, static_cast<long>(j)) * rpow(q, static_cast<long>(k - j)));
        c[k] = acc;
    }
    return c;
}

RationalSeries reciprocal_series(const RationalSeries& phi) {
    if (phi[0] == 0) throw DomainError("reciprocal_series: constant term is zero");
    const std::size_t order = phi.order();
    RationalSeries alpha(order);
    alpha[0] = Rational(1) / phi[0];
    for (std::size_t k = 1; k <= order; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += phi[j] * alpha[k - j];
        alpha[k] = -acc / phi[0];
    }
    return alpha;
}

RationalSeries solve_laplace_product_recursion(const Rational& lambda, std::size_t order) {
    if (order < 2) throw ParameterError("recursion order must be >= 2");
    if (lambda <= 0) throw ParameterError("lambda must be positive");
    RationalSeries a(order);
    a[0] = 1;
    a[1] = lambda;
    for (std::size_t k = 2; k <= order; ++k) {
        Rational cross = 0;
        for (std::size_t j = 1; j < k; ++j) cross += laplace_weight(j, k) * a[j] * a[k - j];
        // coefficient of a_k (from j = 0 and j = k, with a_0 = 1)
        const Rational pivot = Rational(4) / Rational(ipow(2, static_cast<long>(k))) - 2;
        a[k] = -cross / pivot;
    }
    return a;
}

Rational laplace_product_equation(const RationalSeries& a, std::size_t k) {
    if (k < 1 || k > a.order()) throw ParameterError("equation index out of range");
    Rational acc = 0;
    for (std::size_t j = 0; j <= k; ++j) acc += laplace_weight(j, k) * a[j] * a[k - j];
    return acc;
}

RationalSeries solve_cdf_cubic_recursion(const Rational& delta, std::size_t order) {
    if (order < 2) throw ParameterError("recursion order must be >= 2");
    RationalSeries c(order);
    c[0] = 0;
    c[1] = delta;
    for (std::size_t k = 2; k <= order; ++k) {
        // Cubic part of the k-th equation; with c_0 = 0 every term containing
        // c_k or c_{k+1} vanishes, so only indices 1..k-1 contribute.
        Rational triple = 0;
        for (std::size_t i = 2; i <= k; ++i) {
            const std::size_t last = k + 1 - i;
            if (last < 1 || last > k - 1) continue;
            Rational inner = 0;
            for (std::size_t j = 1; j < i; ++j) inner += c[j] * c[i - j];
            triple += inner * Rational(static_cast<long>(last)) * c[last];
        }
        const Rational pivot = Rational(1) - Rational(ipow(2, static_cast<long>(k) + 1))
                             + Rational(ipow(3, static_cast<long>(k)));
        c[k] = -triple / pivot;
    }
    return c;
}

Rational cdf_cubic_equation(const RationalSeries& c, std::size_t k) {
    if (k + 1 > c.order()) throw ParameterError("equation index needs coefficients up to k+1");
    Rational triple = 0;
    for (std::size_t i = 0; i <= k; ++i) {
        Rational inner = 0;
        for (std::size_t j = 0; j <= i; ++j) inner += c[j] * c[i - j];
        triple += inner * Rational(static_cast<long>(k + 1 - i)) * c[k + 1 - i];
    }
    const Rational linear = c[k] * (Rational(1) - Rational(ipow(2, static_cast<long>(k) + 1))
                                    + Rational(ipow(3, static_cast<long>(k))));
    return triple + linear;
}

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::binomial_a: return "binomial-a";
        case IdentityId::binomial_b: return "binomial-b";
        case IdentityId::factorial_sum: return "factorial-sum";
        case IdentityId::laplace_product: return "laplace-product";
        case IdentityId::derivative_g: return "derivative-g";
        case IdentityId::derivative_h: return "derivative-h";
    }
    return "unknown";
}

BigInt binomial_exact(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (long i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return num / den;
}

BigInt factorial_exact(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

IdentityWitness factorial_sum_identity(long k) {
    if (k < 1) throw ParameterError("factorial_sum_identity: k must be >= 1");
    Rational lhs = 0;
    for (long i = 2; i <= k + 1; ++i)
        for (long j = 1; j <= i - 1; ++j)
            lhs += Rational(1) / Rational(factorial_exact(j) * factorial_exact(i - j) * factorial_exact(k + 1 - i));
    const Rational rhs = Rational(ipow(3, k + 1) - ipow(2, k + 2) + 1) / Rational(factorial_exact(k + 1));
    return {IdentityId::factorial_sum, k, lhs, rhs, lhs == rhs};
}

IdentityWitness binomial_identity_a(long n) {
    if (n < 4) throw ParameterError("binomial_identity_a: n must be >= 4");
    const BigInt lhs = ipow(3, n - 2) - binomial_exact(n, 2);
    BigInt rhs = 0;
    for (long i = 3; i <= n; ++i)
        rhs += (binomial_exact(n, i) - ipow(3, n - i)) * (ipow(2, i - 1) - 1);
    return {IdentityId::binomial_a, n, Rational(lhs), Rational(rhs), lhs == rhs};
}

IdentityWitness binomial_identity_b(long n) {
    if (n < 4) throw ParameterError("binomial_identity_b: n must be >= 4");
    const BigInt lhs = 1 - binomial_exact(n, 2);
    BigInt rhs = 0;
    for (long i = 3; i <= n; ++i)
        rhs += binomial_exact(n, i) * (ipow(2, i - 1) - 1) - (ipow(3, i - 1) - ipow(2, i - 1));
    return {IdentityId::binomial_b, n, Rational(lhs), Rational(rhs), lhs == rhs};
}

IdentityWitness laplace_identity_check(const Rational& lambda, const Rational& t) {
    if (t < 0) throw ParameterError("laplace_identity_check: t must be nonnegative");
    const auto phi = [&](const Rational& s) { return Rational(1) / (1 + lambda * s); };
    const Rational lhs = phi(t) * phi(t / 2) * phi(t / 3);
    const Rational rhs = 3 * phi(t) - 3 * phi(t / 2) + phi(t / 3);
    return {IdentityId::laplace_product, 0, lhs, rhs, lhs == rhs};
}

std::array<IdentityWitness, 2> derivative_identity_check(long n, const Rational& lambda) {
    if (n < 3) throw ParameterError("derivative_identity_check: n must be >= 3");
    if (lambda <= 0) throw ParameterError("derivative_identity_check: lambda must be positive");

    const Rational f0 = Rational(1) / lambda;     // f(0)
    const Rational ratio = -Rational(1) / lambda; // f'(0)/f(0)
    const auto f_deriv = [&](long m) { return rpow(ratio, m) * f0; };  // f^(m)(0)
    const auto g_deriv = [&](long j) {  // G^(j)(0), zero at j = 0
        if (j == 0) return Rational(0);
        return f0 * f0 * rpow(ratio, j - 1) * Rational(ipow(2, j) - 1);
    };
    const auto h_deriv = [&](long j) {  // H^(j)(0), zero at j = 0
        if (j == 0) return Rational(0);
        return f0 * f0 * rpow(ratio, j - 1) * Rational(ipow(3, j) - ipow(2, j));
    };

    Rational g_lhs = 0, g_rhs = 0;
    for (long i = 1; i <= n; ++i) {
        g_lhs += Rational(ipow(3, n - i)) * f_deriv(n - i) * g_deriv(i - 1);
        g_rhs += Rational(binomial_exact(n, i)) * f_deriv(n - i) * g_deriv(i - 1);
    }

    Rational h_lhs = 0, h_rhs = 0;
    for (long i = 1; i <= n - 1; ++i) {
        h_lhs += f_deriv(n - 1 - i) * h_deriv(i);
        h_rhs += Rational(binomial_exact(n, i + 1)) * f_deriv(n - 1 - i) * g_deriv(i);
    }

    return {IdentityWitness{IdentityId::derivative_g, n, g_lhs, g_rhs, g_lhs == g_rhs},
            IdentityWitness{IdentityId::derivative_h, n, h_lhs, h_rhs, h_lhs == h_rhs}};
}

}  // namespace exptrio
