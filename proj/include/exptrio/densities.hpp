#ifndef EXPTRIO_DENSITIES_HPP
#define EXPTRIO_DENSITIES_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "exptrio/distribution.hpp"

namespace exptrio {

enum class Symbol { pdf, cdf, survival };

// An alternating combination sum(j=1..n) C(n,j) (-1)^(j-1) j g_j(j x), where
// g_j is the pdf, cdf or survival function named by symbols[j-1]. The all-pdf
// form is the density of sum(X_j / j) under exponentiality; the all-survival
// form is the density of the sample maximum.
struct MixedForm {
    std::vector<Symbol> symbols;

    static MixedForm all_pdf(std::size_t n);
    static MixedForm all_survival(std::size_t n);

    std::size_t order() const noexcept { return symbols.size(); }
};

// The seven canonical three-term mixed forms (index 1..7). Form 5 carries a
// distribution-function symbol in its first slot, which is not integrable;
// by default that slot is evaluated as the survival function instead, and
// literal_cdf_slot = true evaluates it as written.
MixedForm mixed_form(int index, bool literal_cdf_slot = false);

double combination_density(const MixedForm& form, const DistributionSpec& spec, double x);

// n F(x)^(n-1) f(x): density of the maximum of n i.i.d. draws.
double max_density(std::size_t n, const DistributionSpec& spec, double x);

// Density of sum(j=1..n) X_j / j at x, for n in {2,...,5}, by convolution
// quadrature to absolute tolerance 1e-6. n = 2 and 3 use (nested) adaptive
// Simpson; n = 4 and 5 use uniform-grid iterated convolution with step
// 2^-10 x plus Richardson extrapolation.
double scaled_sum_density(std::size_t n, const DistributionSpec& spec, double x);

// Density of max(X1, X2) + X3/3 at x:
// 6 * integral(0..x) f(3y) F(x-y) f(x-y) dy, adaptive tolerance 1e-8.
double max2_plus_third_density(const DistributionSpec& spec, double x);

// Q(y) = f(y) - survival(y); identically zero exactly for the unit exponential.
double q_function(const DistributionSpec& spec, double y);

struct DiscrepancyReport {
    std::vector<double> grid;
    std::vector<double> lhs;
    std::vector<double> rhs;
    double sup_residual = 0.0;
    double l2_residual = 0.0;
    double argmax_x = 0.0;
};

using DensityFn = std::function<double(double)>;

// Evaluates both sides pointwise on a strictly increasing positive grid.
// sup_residual is max |lhs - rhs|; l2_residual is the square root of the
// trapezoid integral of (lhs - rhs)^2 over the grid.
DiscrepancyReport discrepancy(const DensityFn& lhs, const DensityFn& rhs,
                              std::span<const double> grid);

// Successive-increment residual of Q on the grid:
// lhs = Q(y) - Q(2y/3), rhs = Q(2y/3) - Q(y/3).
DiscrepancyReport q_residual(const DistributionSpec& spec, std::span<const double> grid);

DensityFn bind_combination(MixedForm form, DistributionSpec spec);
DensityFn bind_max_density(std::size_t n, DistributionSpec spec);
DensityFn bind_scaled_sum(std::size_t n, DistributionSpec spec);
DensityFn bind_max2_plus_third(DistributionSpec spec);

// Named identity pair for the CLI / reports. Recognized names:
//   comb-pdf comb-surv mixed-1 .. mixed-7 max scaled-sum max2-third q-residual
// Throws ParameterError for unknown names. For "q-residual" use q_residual()
// directly; this helper covers the two-density forms.
std::pair<DensityFn, DensityFn> density_pair(const std::string& form_name,
                                             const DistributionSpec& spec,
                                             bool literal_mixed5 = false,
                                             std::size_t n = 3);

}  // namespace exptrio

#endif  // EXPTRIO_DENSITIES_HPP
