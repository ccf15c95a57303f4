#ifndef EXPTRIO_GOF_HPP
#define EXPTRIO_GOF_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "exptrio/distribution.hpp"
#include "exptrio/ranksum.hpp"

namespace exptrio {

// Derived statistics from a six-way split of a sample into equal subsets
// U, V, W, X, Y, Z of size m:
//   R_i = U_i + V_i/2 + W_i/3
//   S_i = max(U_i, V_i) + W_i/3
//   T_i = max(X_i, Y_i, Z_i)
// R, S and T share a common distribution exactly when the parent sample is
// exponential.
struct TripleStatistics {
    std::vector<double> r;
    std::vector<double> s;
    std::vector<double> t;
    std::uint64_t split_seed = 0;
};

// Builds triples from values taken in the given order: the first sixth is U,
// the next V, then W, X, Y, Z (identity-permutation mode).
TripleStatistics build_triples(std::span<const double> ordered);

// Seeded uniform random permutation, then build_triples. Deterministic given
// the seed. The sample length must be a positive multiple of six.
TripleStatistics split_and_build(const Sample& sample, std::uint64_t seed);

struct TestReport {
    TripleStatistics triples;
    WilcoxonResult r_vs_t;
    WilcoxonResult s_vs_t;
    double alpha = 0.0;
    bool reject = false;  // true when min(p1, p2) < alpha / 2
};

// Splits, runs R-vs-T and S-vs-T rank-sum comparisons, and combines the two
// p-values with a Bonferroni rule at level alpha/2 each.
TestReport exponentiality_test(const Sample& sample, double alpha, std::uint64_t seed);

// Same decision procedure starting from precomputed R/S/T triples.
TestReport exponentiality_test_from_triples(TripleStatistics triples, double alpha);

}  // namespace exptrio

#endif  // EXPTRIO_GOF_HPP
