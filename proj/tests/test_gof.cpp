#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "exptrio/csv.hpp"
#include "exptrio/errors.hpp"
#include "exptrio/gof.hpp"
#include "exptrio/rng.hpp"
#include "testutil.hpp"

using namespace exptrio;

TEST_CASE("triples from values in identity order") {
    const std::vector<double> values{1, 2, 3, 4, 5, 6};
    const TripleStatistics t = build_triples(values);
    REQUIRE(t.r.size() == 1);
    CHECK(t.r[0] == doctest::Approx(3.0));   // 1 + 2/2 + 3/3
    CHECK(t.s[0] == doctest::Approx(3.0));   // max(1,2) + 3/3
    CHECK(t.t[0] == doctest::Approx(6.0));   // max(4,5,6)
}

TEST_CASE("shape and data errors on malformed input") {
    CHECK_THROWS_AS(build_triples(std::vector<double>(100, 1.0)), ShapeError);
    CHECK_THROWS_AS(build_triples(std::vector<double>{}), ShapeError);
    std::vector<double> negative(6, 1.0);
    negative[3] = -2.0;
    CHECK_THROWS_AS(build_triples(negative), DataError);
    // the shape error tells the caller what to do
    try {
        build_triples(std::vector<double>(8, 1.0));
    } catch (const ShapeError& e) {
        CHECK(std::string(e.what()).find("truncate") != std::string::npos);
    }
}

TEST_CASE("split is deterministic and uses every value exactly once") {
    const Sample data = sample(DistributionSpec::exponential(1.0), 180, 77);
    const TripleStatistics a = split_and_build(data, 5);
    const TripleStatistics b = split_and_build(data, 5);
    CHECK(a.r == b.r);
    CHECK(a.s == b.s);
    CHECK(a.t == b.t);
    CHECK(a.split_seed == 5);

    const TripleStatistics c = split_and_build(data, 6);
    CHECK(a.r != c.r);

    // multiset equality: U+V+W recovered from R and S is not direct, but the
    // T block alone uses 3m values; validate instead through a full rebuild
    // with the identity order on a sorted copy
    std::vector<double> sorted = data.values;
    std::sort(sorted.begin(), sorted.end());
    const TripleStatistics d = build_triples(sorted);
    CHECK(d.r.size() == 30);
}

TEST_CASE("the permutation assigns a uniform-looking split (multiset check)") {
    // reconstruct the shuffled vector through a white-box rerun of the same
    // generator, then check it is a permutation of the input
    const Sample data = sample(DistributionSpec::gamma(2.0, 1.0), 60, 123);
    std::vector<double> shuffled = data.values;
    SplitMix64 gen(9);
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[gen.next_below(i)]);

    std::multiset<double> original(data.values.begin(), data.values.end());
    std::multiset<double> permuted(shuffled.begin(), shuffled.end());
    CHECK(original == permuted);

    // and split_and_build on that seed matches build_triples of the shuffle
    const TripleStatistics via_split = split_and_build(data, 9);
    const TripleStatistics via_manual = build_triples(shuffled);
    CHECK(via_split.r == via_manual.r);
    CHECK(via_split.s == via_manual.s);
    CHECK(via_split.t == via_manual.t);
}

TEST_CASE("exponentiality test on the shipped fixture fails to reject") {
    const TripleStatistics triples = read_rst_fixture_file(testutil::data_path("table1_rst.txt"));
    const TestReport report = exponentiality_test_from_triples(triples, 0.05);
    CHECK(!report.reject);
    CHECK(report.r_vs_t.p_value > 0.5);
    CHECK(report.s_vs_t.p_value > 0.5);
    CHECK(report.alpha == 0.05);
}

TEST_CASE("exponentiality test is reproducible bit for bit") {
    const Sample data = sample(DistributionSpec::exponential(1.0), 180, 2718);
    const TestReport a = exponentiality_test(data, 0.05, 99);
    const TestReport b = exponentiality_test(data, 0.05, 99);
    CHECK(a.r_vs_t.w == b.r_vs_t.w);
    CHECK(a.r_vs_t.p_value == b.r_vs_t.p_value);
    CHECK(a.s_vs_t.w == b.s_vs_t.w);
    CHECK(a.s_vs_t.p_value == b.s_vs_t.p_value);
    CHECK(a.reject == b.reject);
}

TEST_CASE("decision rule rejects when either comparison is extreme enough") {
    // alpha just above twice the smaller p flips the decision
    const Sample data = sample(DistributionSpec::weibull(0.5, 1.0), 180, 4);
    const TestReport report = exponentiality_test(data, 0.05, 4);
    const double min_p = std::min(report.r_vs_t.p_value, report.s_vs_t.p_value);
    CHECK(report.reject == (min_p < 0.025));
    CHECK_THROWS_AS(exponentiality_test(data, 0.0, 4), ParameterError);
    CHECK_THROWS_AS(exponentiality_test(data, 1.0, 4), ParameterError);
}
