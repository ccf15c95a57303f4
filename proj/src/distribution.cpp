#include "exptrio/distribution.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "exptrio/errors.hpp"
#include "exptrio/quadrature.hpp"
#include "exptrio/rng.hpp"

namespace exptrio {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw ParameterError(std::string(name) + " must be a positive finite real");
}

double standard_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double standard_normal_survival(double z) {
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

}  // namespace

DistributionSpec::DistributionSpec(Family family, double scale, double shape)
    : family_(family), scale_(scale), shape_(shape) {}

DistributionSpec DistributionSpec::exponential(double scale) {
    require_positive(scale, "scale");
    return {Family::exponential, scale, 0.0};
}

DistributionSpec DistributionSpec::weibull(double shape, double scale) {
    require_positive(shape, "shape");
    require_positive(scale, "scale");
    return {Family::weibull, scale, shape};
}

DistributionSpec DistributionSpec::gamma(double shape, double scale) {
    require_positive(shape, "shape");
    require_positive(scale, "scale");
    return {Family::gamma, scale, shape};
}

DistributionSpec DistributionSpec::lognormal(double shape, double scale) {
    require_positive(shape, "shape");
    require_positive(scale, "scale");
    return {Family::lognormal, scale, shape};
}

DistributionSpec DistributionSpec::uniform(double upper) {
    require_positive(upper, "upper bound");
    return {Family::uniform, upper, 0.0};
}

double DistributionSpec::shape() const {
    if (!has_shape()) throw ParameterError("family has no shape parameter");
    return shape_;
}

double DistributionSpec::pdf(double x) const {
    if (x < 0.0) return 0.0;
    switch (family_) {
        case Family::exponential:
            return std::exp(-x / scale_) / scale_;
        case Family::weibull: {
            if (x == 0.0) return pdf_at_origin();
            const double r = x / scale_;
            return (shape_ / scale_) * std::pow(r, shape_ - 1.0) * std::exp(-std::pow(r, shape_));
        }
        case Family::gamma: {
            if (x == 0.0) return pdf_at_origin();
            const double r = x / scale_;
            // exp((k-1) log r - r - log Gamma(k)) / scale
            return std::exp((shape_ - 1.0) * std::log(r) - r - std::lgamma(shape_)) / scale_;
        }
        case Family::lognormal: {
            if (x == 0.0) return 0.0;
            const double w = std::log(x / scale_) / shape_;
            return std::exp(-0.5 * w * w) / (x * shape_ * std::sqrt(2.0 * std::numbers::pi));
        }
        case Family::uniform:
            return x <= scale_ ? 1.0 / scale_ : 0.0;
    }
    return 0.0;
}

double DistributionSpec::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    switch (family_) {
        case Family::exponential:
            return -std::expm1(-x / scale_);
        case Family::weibull:
            return -std::expm1(-std::pow(x / scale_, shape_));
        case Family::gamma:
            return boost::math::gamma_p(shape_, x / scale_);
        case Family::lognormal:
            return standard_normal_cdf(std::log(x / scale_) / shape_);
        case Family::uniform:
            return std::min(x / scale_, 1.0);
    }
    return 0.0;
}

double DistributionSpec::survival(double x) const {
    if (x <= 0.0) return 1.0;
    switch (family_) {
        case Family::exponential:
            return std::exp(-x / scale_);
        case Family::weibull:
            return std::exp(-std::pow(x / scale_, shape_));
        case Family::gamma:
            return boost::math::gamma_q(shape_, x / scale_);
        case Family::lognormal:
            return standard_normal_survival(std::log(x / scale_) / shape_);
        case Family::uniform:
            return std::max(1.0 - x / scale_, 0.0);
    }
    return 0.0;
}

double DistributionSpec::pdf_at_origin() const {
    switch (family_) {
        case Family::exponential:
            return 1.0 / scale_;
        case Family::weibull:
        case Family::gamma:
            if (shape_ < 1.0) return kInf;
            if (shape_ == 1.0) return 1.0 / scale_;
            return 0.0;
        case Family::lognormal:
            return 0.0;
        case Family::uniform:
            return 1.0 / scale_;
    }
    return 0.0;
}

double DistributionSpec::laplace(double t) const {
    switch (family_) {
        case Family::exponential: {
            if (t <= -1.0 / scale_) throw DomainError("laplace: t outside finiteness region");
            return 1.0 / (1.0 + scale_ * t);
        }
        case Family::gamma: {
            if (t <= -1.0 / scale_) throw DomainError("laplace: t outside finiteness region");
            return std::pow(1.0 + scale_ * t, -shape_);
        }
        case Family::uniform: {
            if (t == 0.0) return 1.0;
            return -std::expm1(-t * scale_) / (t * scale_);
        }
        case Family::weibull: {
            if (shape_ == 1.0) {
                if (t <= -1.0 / scale_) throw DomainError("laplace: t outside finiteness region");
                return 1.0 / (1.0 + scale_ * t);
            }
            if (shape_ < 1.0 && t < 0.0)
                throw DomainError("laplace: t outside finiteness region");
            break;
        }
        case Family::lognormal: {
            if (t < 0.0) throw DomainError("laplace: t outside finiteness region");
            break;
        }
    }
    if (t == 0.0) return 1.0;

    if (family_ == Family::weibull && shape_ < 1.0) {
        // t >= 0 here; substituting u = (x/scale)^shape removes the
        // endpoint singularity of the density
        const double inv_shape = 1.0 / shape_;
        const auto integrand = [&](double u) {
            return std::exp(-t * scale_ * std::pow(u, inv_shape) - u);
        };
        return integrate(integrand, 0.0, 45.0, 1e-10);
    }

    // No closed form: adaptive quadrature of exp(-t x) f(x) on (0, X].
    double upper = inverse_survival(1e-13);
    if (t < 0.0) {
        // shape > 1 weibull: the integrand eventually decays; extend the
        // truncation point until it is negligible.
        int guard = 0;
        while (pdf(upper) * std::exp(-t * upper) > 1e-18 && guard++ < 400) upper *= 1.25;
        if (guard >= 400) throw DomainError("laplace: integrand failed to decay");
    }
    const auto integrand = [&](double x) { return std::exp(-t * x) * pdf(x); };
    return integrate(integrand, 0.0, upper, 1e-10);
}

double DistributionSpec::inverse_survival(double s) const {
    if (!(s > 0.0) || !(s < 1.0)) throw ParameterError("inverse_survival: s must lie in (0,1)");
    double hi = scale_;
    int guard = 0;
    while (survival(hi) > s && guard++ < 4096) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (survival(mid) > s)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

std::string DistributionSpec::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::exponential: os << "exponential(scale=" << scale_ << ")"; break;
        case Family::weibull: os << "weibull(shape=" << shape_ << ", scale=" << scale_ << ")"; break;
        case Family::gamma: os << "gamma(shape=" << shape_ << ", scale=" << scale_ << ")"; break;
        case Family::lognormal: os << "lognormal(shape=" << shape_ << ", scale=" << scale_ << ")"; break;
        case Family::uniform: os << "uniform(0, " << scale_ << ")"; break;
    }
    return os.str();
}

std::vector<double> make_default_grid(const DistributionSpec& spec, std::size_t points,
                                      double x_min, double tail_survival) {
    if (points < 2) throw ParameterError("grid needs at least two points");
    const double x_max = spec.inverse_survival(tail_survival);
    if (!(x_max > x_min)) throw ParameterError("grid upper end does not exceed lower end");
    std::vector<double> grid(points);
    const double log_lo = std::log(x_min);
    const double step = (std::log(x_max) - log_lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = std::exp(log_lo + step * static_cast<double>(i));
    grid.back() = x_max;
    return grid;
}

namespace {

double draw_gamma(SplitMix64& gen, double shape, double scale) {
    if (shape < 1.0) {
        // boost: Gamma(shape) = Gamma(shape + 1) * U^(1/shape)
        const double g = draw_gamma(gen, shape + 1.0, 1.0);
        return scale * g * std::pow(gen.next_unit(), 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze/rejection
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = gen.next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = gen.next_unit();
        if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

double draw_one(SplitMix64& gen, const DistributionSpec& spec) {
    switch (spec.family()) {
        case Family::exponential:
            return -spec.scale() * std::log(gen.next_unit());
        case Family::weibull:
            return spec.scale() * std::pow(-std::log(gen.next_unit()), 1.0 / spec.shape());
        case Family::gamma:
            return draw_gamma(gen, spec.shape(), spec.scale());
        case Family::lognormal:
            return spec.scale() * std::exp(spec.shape() * gen.next_normal());
        case Family::uniform:
            return spec.scale() * gen.next_unit();
    }
    return 0.0;
}

}  // namespace

Sample sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw ParameterError("sample: n must be at least 1");
    SplitMix64 gen(seed);
    std::vector<double> values(n);
    for (auto& v : values) v = draw_one(gen, spec);
    return Sample{std::move(values), seed, spec.describe()};
}

Sample external_sample(std::vector<double> values, std::string source) {
    if (values.empty()) throw ShapeError("sample must contain at least one value");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw DataError("sample values must be positive and finite");
    return Sample{std::move(values), std::nullopt, std::move(source)};
}

}  // namespace exptrio
