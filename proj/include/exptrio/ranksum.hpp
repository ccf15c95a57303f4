#ifndef EXPTRIO_RANKSUM_HPP
#define EXPTRIO_RANKSUM_HPP

// Two-sample Wilcoxon rank-sum (Mann-Whitney) test.
//
// The statistic W reported here is the Mann-Whitney count for the first
// sample: the sum of its midranks in the pooled sample minus the minimum
// possible rank sum m(m+1)/2. Under the null it ranges over [0, m*n] with
// mean m*n/2. With no ties and both sample sizes at most 50 the two-sided
// p-value is exact, computed from the full null distribution of W (the
// Gaussian-binomial coefficient counts, built once per (m, n) and cached).
// Otherwise the tie-corrected normal approximation with a continuity
// correction of 0.5 toward the mean is used:
//   var = m n / 12 * [ (N + 1) - sum(t^3 - t) / (N (N - 1)) ],  N = m + n.

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace exptrio {

struct WilcoxonResult {
    double w;          // rank-sum of x minus m(m+1)/2 (Mann-Whitney count)
    double z;          // continuity-corrected normal deviate
    double p_value;
    enum class Method { exact, normal_approx } method;
    bool ties_present;
    std::size_t m;     // size of x
    std::size_t n;     // size of y
};

WilcoxonResult wilcoxon_rank_sum(std::span<const double> x, std::span<const double> y);

// Midranks of the pooled values plus the tie term sum(t^3 - t).
struct RankInfo {
    std::vector<double> ranks;
    double tie_term;
    bool ties;
};
RankInfo compute_midranks(std::span<const double> values);

// Null distribution of W for tie-free samples of sizes (m, n): count[u] is
// the number of the C(m+n, m) pooled orderings with statistic u. Built by
// iterative polynomial multiplication in exact integers and cached per
// (m, n) under a mutex (single-writer initialization).
class ExactRankSumDistribution {
  public:
    static const ExactRankSumDistribution& get(std::size_t m, std::size_t n);

    std::size_t max_statistic() const noexcept { return counts_.size() - 1; }
    const boost::multiprecision::cpp_int& count(std::size_t u) const { return counts_.at(u); }
    const boost::multiprecision::cpp_int& total() const noexcept { return total_; }

    // 2 * min(P(W <= w), P(W >= w)), capped at 1.
    double two_sided_p(double w) const;

  private:
    ExactRankSumDistribution(std::size_t m, std::size_t n);

    std::vector<boost::multiprecision::cpp_int> counts_;
    boost::multiprecision::cpp_int total_;
};

// Tie-corrected two-sided normal-approximation p-value; z_out receives the
// continuity-corrected deviate. Throws DegenerateError when the rank
// variance vanishes (all pooled values identical).
double normal_approx_two_sided_p(double w, std::size_t m, std::size_t n,
                                 double tie_term, double* z_out = nullptr);

}  // namespace exptrio

#endif  // EXPTRIO_RANKSUM_HPP
