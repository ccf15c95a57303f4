#include "exptrio/densities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exptrio/errors.hpp"
#include "exptrio/quadrature.hpp"

namespace exptrio {

namespace {

double binomial(std::size_t n, std::size_t k) {
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

double evaluate_symbol(Symbol s, const DistributionSpec& spec, double x) {
    switch (s) {
        case Symbol::pdf: return spec.pdf(x);
        case Symbol::cdf: return spec.cdf(x);
        case Symbol::survival: return spec.survival(x);
    }
    return 0.0;
}

// Trapezoid convolution restricted to [0, N h]: c[i] = h sum'' a[j] b[i-j].
std::vector<double> convolve_trapezoid(const std::vector<double>& a,
                                       const std::vector<double>& b, double h) {
    const std::size_t n = a.size();
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        double acc = 0.5 * (a[0] * b[i] + a[i] * b[0]);
        for (std::size_t j = 1; j < i; ++j) acc += a[j] * b[i - j];
        c[i] = acc * h;
    }
    return c;
}

// Iterated trapezoid convolution of the component densities j f(j y) on a
// uniform grid over [0, x]; returns the n-fold density at x.
double scaled_sum_by_grid(std::size_t n, const DistributionSpec& spec, double x,
                          std::size_t steps) {
    const double h = x / static_cast<double>(steps);
    auto component = [&](std::size_t j) {
        std::vector<double> v(steps + 1);
        for (std::size_t i = 0; i <= steps; ++i) {
            const double w = static_cast<double>(j) * spec.pdf(static_cast<double>(j) * h * static_cast<double>(i));
            if (!std::isfinite(w))
                throw NumericError("scaled_sum_density: component density is singular on the grid",
                                   std::numeric_limits<double>::infinity());
            v[i] = w;
        }
        return v;
    };
    std::vector<double> g = component(1);
    for (std::size_t j = 2; j <= n; ++j) g = convolve_trapezoid(g, component(j), h);
    return g.back();
}

double scaled_sum_adaptive2(const DistributionSpec& spec, double x) {
    const auto integrand = [&](double y) { return spec.pdf(y) * 2.0 * spec.pdf(2.0 * (x - y)); };
    return integrate(integrand, 0.0, x, 1e-9);
}

double scaled_sum_adaptive3(const DistributionSpec& spec, double x) {
    const auto inner = [&](double u) {
        const auto integrand = [&](double y) { return spec.pdf(y) * 2.0 * spec.pdf(2.0 * (u - y)); };
        return u > 0.0 ? integrate(integrand, 0.0, u, 1e-10) : 0.0;
    };
    const auto outer = [&](double u) { return inner(u) * 3.0 * spec.pdf(3.0 * (x - u)); };
    return integrate(outer, 0.0, x, 1e-8);
}

}  // namespace

MixedForm MixedForm::all_pdf(std::size_t n) {
    if (n < 2) throw ParameterError("mixed form needs order >= 2");
    return MixedForm{std::vector<Symbol>(n, Symbol::pdf)};
}

MixedForm MixedForm::all_survival(std::size_t n) {
    if (n < 2) throw ParameterError("mixed form needs order >= 2");
    return MixedForm{std::vector<Symbol>(n, Symbol::survival)};
}

MixedForm mixed_form(int index, bool literal_cdf_slot) {
    const Symbol f = Symbol::pdf;
    const Symbol sv = Symbol::survival;
    switch (index) {
        case 1: return MixedForm{{f, f, sv}};
        case 2: return MixedForm{{f, sv, f}};
        case 3: return MixedForm{{sv, f, f}};
        case 4: return MixedForm{{f, sv, sv}};
        case 5: return MixedForm{{literal_cdf_slot ? Symbol::cdf : sv, f, sv}};
        case 6: return MixedForm{{sv, sv, f}};
        case 7: return MixedForm{{sv, sv, sv}};
        default: throw ParameterError("mixed form index must be 1..7");
    }
}

double combination_density(const MixedForm& form, const DistributionSpec& spec, double x) {
    const std::size_t n = form.order();
    if (n < 2) throw ParameterError("combination_density: order must be >= 2");
    double sum = 0.0;
    double sign = 1.0;
    for (std::size_t j = 1; j <= n; ++j) {
        const double jx = static_cast<double>(j) * x;
        sum += sign * binomial(n, j) * static_cast<double>(j) * evaluate_symbol(form.symbols[j - 1], spec, jx);
        sign = -sign;
    }
    return sum;
}

double max_density(std::size_t n, const DistributionSpec& spec, double x) {
    if (n < 2) throw ParameterError("max_density: n must be >= 2");
    return static_cast<double>(n) * std::pow(spec.cdf(x), static_cast<double>(n - 1)) * spec.pdf(x);
}

double scaled_sum_density(std::size_t n, const DistributionSpec& spec, double x) {
    if (n < 2 || n > 5) throw ParameterError("scaled_sum_density: n must be in {2,3,4,5}");
    if (!(x > 0.0)) throw ParameterError("scaled_sum_density: x must be positive");
    switch (n) {
        case 2: return scaled_sum_adaptive2(spec, x);
        case 3: return scaled_sum_adaptive3(spec, x);
        default: {
            const double coarse = scaled_sum_by_grid(n, spec, x, 1u << 10);
            const double fine = scaled_sum_by_grid(n, spec, x, 1u << 11);
            return (4.0 * fine - coarse) / 3.0;  // Richardson, trapezoid is O(h^2)
        }
    }
}

double max2_plus_third_density(const DistributionSpec& spec, double x) {
    if (!(x > 0.0)) throw ParameterError("max2_plus_third_density: x must be positive");
    const auto integrand = [&](double y) {
        const double u = x - y;
        return spec.pdf(3.0 * y) * spec.cdf(u) * spec.pdf(u);
    };
    return 6.0 * integrate(integrand, 0.0, x, 1e-8);
}

double q_function(const DistributionSpec& spec, double y) {
    return spec.pdf(y) - spec.survival(y);
}

DiscrepancyReport discrepancy(const DensityFn& lhs, const DensityFn& rhs,
                              std::span<const double> grid) {
    if (grid.empty()) throw ParameterError("discrepancy: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
            throw ParameterError("discrepancy: grid must be strictly increasing and positive");
    }
    DiscrepancyReport report;
    report.grid.assign(grid.begin(), grid.end());
    report.lhs.resize(grid.size());
    report.rhs.resize(grid.size());
    report.argmax_x = grid.front();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        report.lhs[i] = lhs(grid[i]);
        report.rhs[i] = rhs(grid[i]);
        const double r = std::abs(report.lhs[i] - report.rhs[i]);
        if (r > report.sup_residual) {
            report.sup_residual = r;
            report.argmax_x = grid[i];
        }
    }
    double l2 = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double ra = report.lhs[i] - report.rhs[i];
        const double rb = report.lhs[i + 1] - report.rhs[i + 1];
        l2 += 0.5 * (ra * ra + rb * rb) * (grid[i + 1] - grid[i]);
    }
    report.l2_residual = std::sqrt(l2);
    return report;
}

DiscrepancyReport q_residual(const DistributionSpec& spec, std::span<const double> grid) {
    const DensityFn lhs = [spec](double y) {
        return q_function(spec, y) - q_function(spec, 2.0 * y / 3.0);
    };
    const DensityFn rhs = [spec](double y) {
        return q_function(spec, 2.0 * y / 3.0) - q_function(spec, y / 3.0);
    };
    return discrepancy(lhs, rhs, grid);
}

DensityFn bind_combination(MixedForm form, DistributionSpec spec) {
    return [form = std::move(form), spec](double x) { return combination_density(form, spec, x); };
}

DensityFn bind_max_density(std::size_t n, DistributionSpec spec) {
    return [n, spec](double x) { return max_density(n, spec, x); };
}

DensityFn bind_scaled_sum(std::size_t n, DistributionSpec spec) {
    return [n, spec](double x) { return scaled_sum_density(n, spec, x); };
}

DensityFn bind_max2_plus_third(DistributionSpec spec) {
    return [spec](double x) { return max2_plus_third_density(spec, x); };
}

std::pair<DensityFn, DensityFn> density_pair(const std::string& form_name,
                                             const DistributionSpec& spec,
                                             bool literal_mixed5, std::size_t n) {
    if (form_name == "comb-pdf")
        return {bind_combination(MixedForm::all_pdf(n), spec), bind_max_density(n, spec)};
    if (form_name == "comb-surv")
        return {bind_combination(MixedForm::all_survival(n), spec), bind_max_density(n, spec)};
    if (form_name.rfind("mixed-", 0) == 0 && form_name.size() == 7) {
        const int index = form_name[6] - '0';
        if (index >= 1 && index <= 7)
            return {bind_combination(mixed_form(index, literal_mixed5 && index == 5), spec),
                    bind_combination(MixedForm::all_pdf(3), spec)};
    }
    if (form_name == "max")
        return {bind_max_density(n, spec), bind_combination(MixedForm::all_pdf(n), spec)};
    if (form_name == "scaled-sum")
        return {bind_scaled_sum(n, spec), bind_max_density(n, spec)};
    if (form_name == "max2-third")
        return {bind_max2_plus_third(spec), bind_max_density(3, spec)};
    throw ParameterError("unknown density form: " + form_name);
}

}  // namespace exptrio
