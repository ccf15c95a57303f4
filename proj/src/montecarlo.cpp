#include "exptrio/montecarlo.hpp"

#include <cmath>

#include "exptrio/errors.hpp"
#include "exptrio/gof.hpp"
#include "exptrio/rng.hpp"

namespace exptrio {

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z) {
    if (trials == 0) throw ParameterError("wilson_interval: trials must be positive");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

PowerEstimate estimate_power(const DistributionSpec& alt, std::size_t n, double alpha,
                             std::size_t replicates, std::uint64_t master_seed) {
    if (n == 0 || n % 6 != 0) throw ParameterError("estimate_power: n must be a positive multiple of six");
    if (replicates < 100) throw ParameterError("estimate_power: need at least 100 replicates");
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");

    std::size_t rejections = 0;
    for (std::size_t r = 0; r < replicates; ++r) {
        const std::uint64_t substream = derive_substream(master_seed, r);
        const Sample data = sample(alt, n, derive_substream(substream, 1));
        if (exponentiality_test(data, alpha, substream).reject) ++rejections;
    }

    PowerEstimate estimate{alt, n, replicates, rejections, alpha, 0.0, {0.0, 0.0}, master_seed};
    estimate.rate = static_cast<double>(rejections) / static_cast<double>(replicates);
    estimate.wilson99 = wilson_interval(rejections, replicates, 2.5758293035489004);
    return estimate;
}

std::vector<PowerEstimate> size_sweep(std::span<const double> alphas, std::size_t n,
                                      std::size_t replicates, std::uint64_t master_seed) {
    const DistributionSpec null_spec = DistributionSpec::exponential(1.0);
    std::vector<PowerEstimate> estimates;
    estimates.reserve(alphas.size());
    for (double alpha : alphas)
        estimates.push_back(estimate_power(null_spec, n, alpha, replicates, master_seed));
    return estimates;
}

std::pair<std::size_t, std::size_t> binomial_acceptance_band(std::size_t trials, double p,
                                                             double tail_mass) {
    if (!(p > 0.0) || !(p < 1.0)) throw ParameterError("p must lie in (0, 1)");
    // pmf by forward recurrence; trials here are small enough that the
    // smallest pmf values stay far above double underflow
    std::vector<double> pmf(trials + 1);
    pmf[0] = std::pow(1.0 - p, static_cast<double>(trials));
    for (std::size_t k = 0; k < trials; ++k)
        pmf[k + 1] = pmf[k] * (static_cast<double>(trials - k) / static_cast<double>(k + 1))
                   * (p / (1.0 - p));

    std::size_t lo = 0;
    double cum = 0.0;
    for (std::size_t k = 0; k <= trials; ++k) {
        cum += pmf[k];
        if (cum > tail_mass) {
            lo = k;
            break;
        }
    }
    std::size_t hi = trials;
    cum = 0.0;
    for (std::size_t k = trials + 1; k-- > 0;) {
        cum += pmf[k];
        if (cum > tail_mass) {
            hi = k;
            break;
        }
    }
    return {lo, hi};
}

}  // namespace exptrio
