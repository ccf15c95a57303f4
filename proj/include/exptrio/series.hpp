#ifndef EXPTRIO_SERIES_HPP
#define EXPTRIO_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace exptrio {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Truncated power series with exact rational coefficients, indices 0..order.
class RationalSeries {
  public:
    explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit RationalSeries(std::vector<Rational> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool operator==(const RationalSeries&) const = default;

  private:
    std::vector<Rational> coeffs_;
};

// Coefficients of a(t/p) b(t/q) truncated at the common order:
// result_k = sum(j=0..k) a_j b_{k-j} / (p^j q^{k-j}).
RationalSeries cauchy_product(const RationalSeries& a, const RationalSeries& b,
                              const Rational& p, const Rational& q);

// Series alpha with alpha * phi = 1 to the truncation order.
// Throws DomainError when phi has zero constant term.
RationalSeries reciprocal_series(const RationalSeries& phi);

// Forward-solves, with a_0 = 1 and a_1 = lambda imposed, the coefficient
// recursion forced by the triple Laplace product identity
//   phi(t) phi(t/2) phi(t/3) = 3 phi(t) - 3 phi(t/2) + phi(t/3):
//   sum(j=0..k) (1/2^{k-j} - 3/3^{k-j} + 3/(2^j 3^{k-j})) a_j a_{k-j} = 0.
// The coefficient multiplying a_k is 2^{2-k} - 2, nonzero for k >= 2.
RationalSeries solve_laplace_product_recursion(const Rational& lambda, std::size_t order);

// Left-hand side of the k-th equation above for given coefficients (the
// direct full sum; used to cross-check the forward solver).
Rational laplace_product_equation(const RationalSeries& a, std::size_t k);

// Forward-solves, with c_0 = 0 and c_1 = delta imposed, the cdf-coefficient
// recursion forced by F^2(x) f(x) + F(x) - 2 F(2x) + F(3x) = 0:
//   sum(i=0..k) sum(j=0..i) c_j c_{i-j} (k+1-i) c_{k+1-i}
//     + c_k (1 - 2^{k+1} + 3^k) = 0.
// The k-th equation pins c_k for k >= 2 (the c_{k+1} term carries c_0^2 = 0).
RationalSeries solve_cdf_cubic_recursion(const Rational& delta, std::size_t order);

Rational cdf_cubic_equation(const RationalSeries& c, std::size_t k);

enum class IdentityId {
    binomial_a,
    binomial_b,
    factorial_sum,
    laplace_product,
    derivative_g,
    derivative_h,
};

struct IdentityWitness {
    IdentityId id;
    long parameter;  // the swept n or k; 0 when not applicable
    Rational lhs;
    Rational rhs;
    bool holds;      // lhs == rhs exactly
};

std::string identity_name(IdentityId id);

// sum(i=2..k+1) sum(j=1..i-1) 1/(j! (i-j)! (k+1-i)!)  ==  (3^{k+1} - 2^{k+2} + 1)/(k+1)!
IdentityWitness factorial_sum_identity(long k);

// 3^{n-2} - C(n,2)  ==  sum(i=3..n) [C(n,i) - 3^{n-i}] (2^{i-1} - 1)
IdentityWitness binomial_identity_a(long n);

// 1 - C(n,2)  ==  sum(i=3..n) [C(n,i) (2^{i-1} - 1) - (3^{i-1} - 2^{i-1})]
IdentityWitness binomial_identity_b(long n);

// phi(t) phi(t/2) phi(t/3)  ==  3 phi(t) - 3 phi(t/2) + phi(t/3)
// with phi(t) = 1/(1 + lambda t), in exact rational arithmetic.
IdentityWitness laplace_identity_check(const Rational& lambda, const Rational& t);

// Under the exponential ansatz f^(m)(0) = (-1/lambda)^m / lambda, checks
//   sum(i=1..n) 3^{n-i} f^{(n-i)}(0) G^{(i-1)}(0)
//     == sum(i=1..n) C(n,i) f^{(n-i)}(0) G^{(i-1)}(0)
// with G^(j)(0) = f^2(0) (f'(0)/f(0))^{j-1} (2^j - 1), and the analogous
// equality with H^(j)(0) = f^2(0) (f'(0)/f(0))^{j-1} (3^j - 2^j) against
// C(n, i+1) G^(i)(0) on the right. Returns the two witnesses {G, H}.
std::array<IdentityWitness, 2> derivative_identity_check(long n, const Rational& lambda = Rational(1));

BigInt binomial_exact(long n, long k);
BigInt factorial_exact(long n);

}  // namespace exptrio

#endif  // EXPTRIO_SERIES_HPP
