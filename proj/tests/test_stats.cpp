#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "rumor/engine.hpp"
#include "rumor/rng.hpp"
#include "rumor/stats.hpp"

using namespace rumor;

TEST_CASE("summary moments and quantiles") {
    std::vector<int> times{5, 3, 9, 3, 7, Trace::kNever, 4};
    std::vector<std::vector<int>> counts(7, std::vector<int>{1, 2, 4});
    const auto s = summarize("quasirandom", times, counts, 4);
    CHECK(s.count == 7);
    CHECK(s.timeout_count == 1);
    CHECK(s.min == 3);
    CHECK(s.max == 9);
    CHECK(s.mean == doctest::Approx((5 + 3 + 9 + 3 + 7 + 4) / 6.0));
    CHECK(s.min <= s.p50);
    CHECK(s.p50 <= s.p90);
    CHECK(s.p90 <= s.p99);
    CHECK(s.p99 <= s.max);
    CHECK(s.stddev >= 0.0);
}

TEST_CASE("quantiles on random samples respect ordering") {
    SplitMix64 rng(4);
    std::vector<int> sample;
    for (int i = 0; i < 500; ++i) sample.push_back(static_cast<int>(rng.below(1000)));
    std::sort(sample.begin(), sample.end());
    CHECK(quantile_nearest_rank(sample, 0.5) <= quantile_nearest_rank(sample, 0.9));
    CHECK(quantile_nearest_rank(sample, 0.9) <= quantile_nearest_rank(sample, 0.99));
    CHECK(quantile_nearest_rank(sample, 1.0) == sample.back());
    CHECK(quantile_nearest_rank(sample, 0.0) == sample.front());
}

TEST_CASE("informed curve is a plateau-extended mean, success prob is a cdf") {
    std::vector<int> times{2, Trace::kNever};
    std::vector<std::vector<int>> counts{{1, 3, 4}, {1, 2}};
    const auto s = summarize("m", times, counts, 4);
    REQUIRE(s.informed_curve.size() == 3);
    CHECK(s.informed_curve[0] == doctest::Approx(1.0));
    CHECK(s.informed_curve[1] == doctest::Approx(2.5));
    CHECK(s.informed_curve[2] == doctest::Approx(3.0));  // second trial plateaus at 2
    for (std::size_t t = 1; t < s.informed_curve.size(); ++t)
        CHECK(s.informed_curve[t] >= s.informed_curve[t - 1]);
    REQUIRE(s.success_prob.size() == 3);
    CHECK(s.success_prob[1] == doctest::Approx(0.0));
    CHECK(s.success_prob[2] == doctest::Approx(0.5));  // 1 - timeout fraction
}

TEST_CASE("chi-square tail probabilities match classic table values") {
    CHECK(gamma_q(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(chi_square_pvalue(7.8147, 3) == doctest::Approx(0.05).epsilon(2e-4));
    CHECK(chi_square_pvalue(16.266, 3) == doctest::Approx(0.001).epsilon(2e-3));
    CHECK(chi_square_pvalue(0.0, 5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(gamma_q(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("uniform goodness-of-fit statistic") {
    CHECK(chi_square_uniform_stat({10, 10, 10, 10}) == doctest::Approx(0.0));
    CHECK(chi_square_uniform_stat({20, 0}) == doctest::Approx(20.0));
}
