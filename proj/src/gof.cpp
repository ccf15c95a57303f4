#include "exptrio/gof.hpp"

#include <algorithm>
#include <cmath>

#include "exptrio/errors.hpp"
#include "exptrio/rng.hpp"

namespace exptrio {

TripleStatistics build_triples(std::span<const double> ordered) {
    if (ordered.empty() || ordered.size() % 6 != 0)
        throw ShapeError("sample length must be a positive multiple of six; "
                         "truncate the data to a multiple of six first");
    const std::size_t m = ordered.size() / 6;
    for (double v : ordered)
        if (!(v > 0.0) || !std::isfinite(v)) throw DataError("sample values must be positive and finite");

    const auto block = [&](std::size_t which, std::size_t i) { return ordered[which * m + i]; };
    TripleStatistics triples;
    triples.r.resize(m);
    triples.s.resize(m);
    triples.t.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double u = block(0, i), v = block(1, i), w = block(2, i);
        const double x = block(3, i), y = block(4, i), z = block(5, i);
        triples.r[i] = u + 0.5 * v + w / 3.0;
        triples.s[i] = std::max(u, v) + w / 3.0;
        triples.t[i] = std::max({x, y, z});
    }
    return triples;
}

TripleStatistics split_and_build(const Sample& sample, std::uint64_t seed) {
    std::vector<double> shuffled = sample.values;
    SplitMix64 gen(seed);
    // Fisher-Yates
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[gen.next_below(i)]);
    TripleStatistics triples = build_triples(shuffled);
    triples.split_seed = seed;
    return triples;
}

TestReport exponentiality_test_from_triples(TripleStatistics triples, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
    TestReport report;
    report.r_vs_t = wilcoxon_rank_sum(triples.r, triples.t);
    report.s_vs_t = wilcoxon_rank_sum(triples.s, triples.t);
    report.alpha = alpha;
    report.reject = std::min(report.r_vs_t.p_value, report.s_vs_t.p_value) < alpha / 2.0;
    report.triples = std::move(triples);
    return report;
}

TestReport exponentiality_test(const Sample& sample, double alpha, std::uint64_t seed) {
    return exponentiality_test_from_triples(split_and_build(sample, seed), alpha);
}

}  // namespace exptrio
