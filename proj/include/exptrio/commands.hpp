#ifndef EXPTRIO_COMMANDS_HPP
#define EXPTRIO_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "exptrio/distribution.hpp"

namespace exptrio {

// Exit codes shared by the CLI: 0 success, 1 verification/numeric failure,
// 2 usage or data error.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsageError = 2;

// Builds a spec from CLI-style arguments. shape is required for weibull /
// gamma / lognormal and rejected otherwise; bound replaces scale for uniform.
DistributionSpec make_spec(const std::string& family, double scale,
                           std::optional<double> shape, std::optional<double> bound);

// Exact-arithmetic identity sweeps; prints a JSON report and returns 1 when
// any witness fails.
int cmd_identities(long max_n, long max_k, std::ostream& out);

struct DensityArgs {
    std::string form;                   // comb-pdf comb-surv mixed-1..7 max scaled-sum max2-third q-residual
    std::string family = "exponential";
    double scale = 1.0;
    std::optional<double> shape;
    std::optional<double> bound;
    std::size_t n = 3;                  // order for comb-*/max/scaled-sum
    std::size_t grid_points = 400;
    bool literal = false;               // evaluate mixed-5 exactly as written
    std::string output;                 // CSV path
};
int cmd_density(const DensityArgs& args, std::ostream& out);

struct TestArgs {
    std::string input;                  // CSV of values, or R/S/T fixture with precomputed_rst
    bool precomputed_rst = false;
    double alpha = 0.05;
    std::uint64_t seed = 1;
    std::optional<std::string> output;  // JSON report path; stdout when absent
};
int cmd_test(const TestArgs& args, std::ostream& out);

struct PowerArgs {
    std::string family = "exponential";
    double scale = 1.0;
    std::optional<double> shape;
    std::optional<double> bound;
    std::size_t n = 180;
    double alpha = 0.05;
    std::size_t replicates = 2000;
    std::uint64_t seed = 1;
};
int cmd_power(const PowerArgs& args, std::ostream& out);

struct SimulateArgs {
    std::string family = "exponential";
    double scale = 1.0;
    std::optional<double> shape;
    std::optional<double> bound;
    std::size_t n = 180;
    std::uint64_t seed = 1;
    std::string output;                 // CSV path
};
int cmd_simulate(const SimulateArgs& args, std::ostream& out);

}  // namespace exptrio

#endif  // EXPTRIO_COMMANDS_HPP
