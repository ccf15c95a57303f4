#ifndef EXPTRIO_MONTECARLO_HPP
#define EXPTRIO_MONTECARLO_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "exptrio/distribution.hpp"

namespace exptrio {

struct PowerEstimate {
    DistributionSpec alternative;
    std::size_t sample_size;
    std::size_t replicates;
    std::size_t rejections;
    double alpha;
    double rate;                         // rejections / replicates
    std::pair<double, double> wilson99;  // 99% Wilson interval for the rate
    std::uint64_t master_seed;
};

// Rejection rate of the exponentiality test over independent replicates.
// Replicate r uses the substream seed derive_substream(master_seed, r) for
// the six-way split; the sample draw uses a further derived stream so the
// two never replay the same uniforms. The result depends only on the inputs,
// not on any execution schedule.
PowerEstimate estimate_power(const DistributionSpec& alt, std::size_t n, double alpha,
                             std::size_t replicates, std::uint64_t master_seed);

// estimate_power under the exponential(1) null for each alpha, sharing the
// master seed so the rejection regions nest.
std::vector<PowerEstimate> size_sweep(std::span<const double> alphas, std::size_t n,
                                      std::size_t replicates, std::uint64_t master_seed);

// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z);

// Central acceptance band [lo, hi] for Binomial(trials, p): lo is the
// smallest k with P(X <= k) > tail_mass, hi the largest with
// P(X >= k) > tail_mass.
std::pair<std::size_t, std::size_t> binomial_acceptance_band(std::size_t trials, double p,
                                                             double tail_mass);

}  // namespace exptrio

#endif  // EXPTRIO_MONTECARLO_HPP
