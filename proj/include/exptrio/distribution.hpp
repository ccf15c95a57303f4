#ifndef EXPTRIO_DISTRIBUTION_HPP
#define EXPTRIO_DISTRIBUTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace exptrio {

enum class Family { exponential, weibull, gamma, lognormal, uniform };

// Parametric family on (0, inf) with closed-form pdf / cdf / survival and a
// Laplace transform. Scale parameterization throughout: the exponential with
// scale lambda has pdf (1/lambda) exp(-x/lambda) and Laplace transform
// 1/(1 + lambda t), so scale equals the mean.
class DistributionSpec {
  public:
    static DistributionSpec exponential(double scale);
    static DistributionSpec weibull(double shape, double scale);
    static DistributionSpec gamma(double shape, double scale);
    // shape = standard deviation of log X, scale = exp(mean of log X).
    static DistributionSpec lognormal(double shape, double scale);
    // Uniform on (0, upper).
    static DistributionSpec uniform(double upper);

    Family family() const noexcept { return family_; }
    double scale() const noexcept { return scale_; }
    bool has_shape() const noexcept { return family_ == Family::weibull || family_ == Family::gamma || family_ == Family::lognormal; }
    double shape() const;  // ParameterError when the family has none

    double pdf(double x) const;
    double cdf(double x) const;
    double survival(double x) const;

    // E[exp(-tX)]. Throws DomainError outside the finiteness region of the
    // family (e.g. any t < 0 for the lognormal). Families without a closed
    // form (weibull with shape != 1, lognormal) are integrated numerically
    // to absolute tolerance 1e-10.
    double laplace(double t) const;

    // f(0+); may be +inf (weibull/gamma with shape < 1).
    double pdf_at_origin() const;

    // Smallest x with survival(x) <= s, by bisection.
    double inverse_survival(double s) const;

    std::string describe() const;

    bool operator==(const DistributionSpec&) const = default;

  private:
    DistributionSpec(Family family, double scale, double shape);

    Family family_;
    double scale_;
    double shape_;  // unused for exponential/uniform
};

// 400 log-spaced points from x_min to the point where survival < tail_survival.
std::vector<double> make_default_grid(const DistributionSpec& spec,
                                      std::size_t points = 400,
                                      double x_min = 1e-3,
                                      double tail_survival = 1e-8);

struct Sample {
    std::vector<double> values;
    std::optional<std::uint64_t> seed;  // empty for external data
    std::string source;
};

// n i.i.d. draws; identical (spec, n, seed) yields bit-identical output.
Sample sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

// Wraps externally supplied values, enforcing positivity and finiteness.
Sample external_sample(std::vector<double> values, std::string source);

}  // namespace exptrio

#endif  // EXPTRIO_DISTRIBUTION_HPP
