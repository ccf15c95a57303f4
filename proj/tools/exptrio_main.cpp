#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "exptrio/commands.hpp"
#include "exptrio/errors.hpp"

namespace {

// Seed resolution: explicit --seed wins, then the EXPTRIO_SEED environment
// variable, then 1.
std::uint64_t default_seed() {
    if (const char* env = std::getenv("EXPTRIO_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw exptrio::ParameterError("EXPTRIO_SEED is not an unsigned integer");
        }
    }
    return 1;
}

struct SpecOptions {
    std::string family = "exponential";
    double scale = 1.0;
    std::optional<double> shape;
    std::optional<double> bound;
};

void add_spec_options(CLI::App* cmd, SpecOptions& opts) {
    cmd->add_option("--family", opts.family,
                    "exponential | weibull | gamma | lognormal | uniform")
        ->capture_default_str();
    cmd->add_option("--scale", opts.scale, "scale parameter (the mean for exponential)")
        ->capture_default_str();
    cmd->add_option("--shape", opts.shape, "shape parameter (weibull/gamma/lognormal)");
    cmd->add_option("--bound", opts.bound, "upper support bound (uniform)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponentiality characterization toolkit: density identity checks, "
                 "exact recursion verification, rank-sum exponentiality testing and "
                 "Monte Carlo calibration"};
    app.require_subcommand(1);

    long max_n = 64, max_k = 40;
    auto* identities = app.add_subcommand("identities", "verify the exact-arithmetic identity suite");
    identities->add_option("--max-n", max_n, "upper end of the n sweeps")->capture_default_str();
    identities->add_option("--max-k", max_k, "upper end of the k sweep")->capture_default_str();

    exptrio::DensityArgs density_args;
    SpecOptions density_spec;
    auto* density = app.add_subcommand("density", "tabulate a density identity pair on a grid");
    density->add_option("--form", density_args.form,
                        "comb-pdf | comb-surv | mixed-1..7 | max | scaled-sum | max2-third | q-residual")
        ->required();
    add_spec_options(density, density_spec);
    density->add_option("--n", density_args.n, "combination order (2..5 where applicable)")
        ->capture_default_str();
    density->add_option("--grid-points", density_args.grid_points, "number of grid points")
        ->capture_default_str();
    density->add_flag("--literal", density_args.literal, "evaluate mixed-5 exactly as written");
    density->add_option("--output,-o", density_args.output, "CSV output path")->required();

    exptrio::TestArgs test_args;
    std::optional<std::uint64_t> test_seed;
    std::optional<std::string> test_output;
    auto* test = app.add_subcommand("test", "run the exponentiality test on a data file");
    test->add_option("--input,-i", test_args.input, "CSV with a 'value' column, or an R/S/T file")
        ->required();
    test->add_flag("--precomputed-rst", test_args.precomputed_rst,
                   "input already holds the R/S/T triples; skip splitting");
    test->add_option("--alpha", test_args.alpha, "overall test level")->capture_default_str();
    test->add_option("--seed", test_seed, "seed for the six-way split");
    test->add_option("--output,-o", test_output, "write the JSON report here instead of stdout");

    exptrio::PowerArgs power_args;
    SpecOptions power_spec;
    std::optional<std::uint64_t> power_seed;
    auto* power = app.add_subcommand("power", "Monte Carlo rejection rate under an alternative");
    add_spec_options(power, power_spec);
    power->add_option("--n", power_args.n, "sample size (multiple of six)")->capture_default_str();
    power->add_option("--alpha", power_args.alpha, "test level")->capture_default_str();
    power->add_option("--replicates", power_args.replicates, "number of replicates (>= 100)")
        ->capture_default_str();
    power->add_option("--seed", power_seed, "master seed");

    exptrio::SimulateArgs sim_args;
    SpecOptions sim_spec;
    std::optional<std::uint64_t> sim_seed;
    auto* simulate = app.add_subcommand("simulate", "draw a sample and write it as CSV");
    add_spec_options(simulate, sim_spec);
    simulate->add_option("--n", sim_args.n, "sample size")->capture_default_str();
    simulate->add_option("--seed", sim_seed, "generator seed");
    simulate->add_option("--output,-o", sim_args.output, "CSV output path")->required();

    try {
        app.parse(argc, argv);

        if (identities->parsed()) return exptrio::cmd_identities(max_n, max_k, std::cout);
        if (density->parsed()) {
            density_args.family = density_spec.family;
            density_args.scale = density_spec.scale;
            density_args.shape = density_spec.shape;
            density_args.bound = density_spec.bound;
            return exptrio::cmd_density(density_args, std::cout);
        }
        if (test->parsed()) {
            test_args.seed = test_seed.value_or(default_seed());
            test_args.output = test_output;
            return exptrio::cmd_test(test_args, std::cout);
        }
        if (power->parsed()) {
            power_args.family = power_spec.family;
            power_args.scale = power_spec.scale;
            power_args.shape = power_spec.shape;
            power_args.bound = power_spec.bound;
            power_args.seed = power_seed.value_or(default_seed());
            return exptrio::cmd_power(power_args, std::cout);
        }
        if (simulate->parsed()) {
            sim_args.family = sim_spec.family;
            sim_args.scale = sim_spec.scale;
            sim_args.shape = sim_spec.shape;
            sim_args.bound = sim_spec.bound;
            sim_args.seed = sim_seed.value_or(default_seed());
            return exptrio::cmd_simulate(sim_args, std::cout);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exptrio::kExitUsageError;
    } catch (const exptrio::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exptrio::kExitVerificationFailure;
    } catch (const std::invalid_argument& e) {  // parameter / shape / data errors
        std::cerr << "error: " << e.what() << "\n";
        return exptrio::kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exptrio::kExitVerificationFailure;
    }
    return exptrio::kExitUsageError;
}
