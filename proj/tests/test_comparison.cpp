#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "qpb/comparison.hpp"

using namespace qpb;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
    return g;
}

const ComparisonFn kSixth{[](double t) { return t / 6.0; }, 2.0};

}  // namespace

TEST_CASE("monotonicity check") {
    CHECK(check_monotone(kSixth, linspace(0.0, 10.0, 101)).passed());

    const ComparisonFn neg{[](double t) { return -t; }, 1.0};
    const ViolationReport r = check_monotone(neg, linspace(0.0, 10.0, 101));
    REQUIRE_FALSE(r.passed());
    CHECK(r.witnesses.front().points == std::vector<double>{0.0, 0.1});

    // sine increases up to pi/2 and decreases afterwards
    const auto grid = linspace(0.0, 3.1, 32);
    const ComparisonFn sine{[](double t) { return std::sin(t); }, 1.0};
    const ViolationReport rs = check_monotone(sine, grid);
    REQUIRE_FALSE(rs.passed());
    long expected = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (std::sin(grid[i]) < std::sin(grid[i - 1]) - 1e-12) ++expected;
    CHECK(static_cast<long>(rs.witnesses.size()) == expected);
    for (const Witness& w : rs.witnesses) CHECK(w.points[0] > 1.5);
}

TEST_CASE("strict contraction check") {
    const std::vector<double> grid{0.5, 1.0, 2.0};
    CHECK(check_strict_contraction(kSixth, grid).passed());

    const ComparisonFn identity{[](double t) { return t; }, 1.0};
    const ViolationReport r = check_strict_contraction(identity, grid);
    CHECK(r.witnesses.size() == grid.size());

    const ComparisonFn rational{[](double t) { return t / (1.0 + t); }, 1.0};
    CHECK(check_strict_contraction(rational, grid).passed());

    CHECK_THROWS_AS(check_strict_contraction(kSixth, std::vector<double>{0.0}),
                    ConfigError);
}

TEST_CASE("series evidence for the geometric case") {
    const SeriesEvidence ev = series_evidence(kSixth, 1.5, 50);
    CHECK(ev.verdict == SeriesVerdict::ConvergentEvidence);
    REQUIRE(ev.partial_sums.size() == 51);
    // terms are 1.5 * (1/3)^i, so the closed form pins every partial sum
    for (std::size_t j = 0; j < ev.partial_sums.size(); ++j) {
        const double closed = 2.25 * (1.0 - std::pow(1.0 / 3.0, j + 1));
        CHECK(ev.partial_sums[j] == doctest::Approx(closed).epsilon(1e-12));
    }
    CHECK(ev.partial_sums.back() == doctest::Approx(2.25).epsilon(1e-9));
    for (double r : ev.term_ratios)
        CHECK(r == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("series evidence flags constant and vanishing terms") {
    const ComparisonFn identity{[](double t) { return t; }, 1.0};
    CHECK(series_evidence(identity, 1.0).verdict == SeriesVerdict::DivergentEvidence);

    const SeriesEvidence zero = series_evidence(kSixth, 0.0);
    CHECK(zero.verdict == SeriesVerdict::ConvergentEvidence);
    for (double s : zero.partial_sums) CHECK(s == 0.0);

    CHECK_THROWS_AS(series_evidence(kSixth, 1.0, 1), ConfigError);

    const ComparisonFn blowup{[](double t) { return std::exp(t); }, 2.0};
    CHECK_THROWS_AS(series_evidence(blowup, 4.0, 64), EvaluationError);
}

TEST_CASE("iterated application") {
    CHECK(kSixth.iterate(1.5, 2) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    CHECK(kSixth.iterate(7.0, 0) == 7.0);
    CHECK(kSixth.iterate(0.0, 5) == 0.0);

    // composition splits arbitrarily
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> t_dist(0.0, 10.0);
    std::uniform_int_distribution<int> n_dist(0, 12);
    for (int trial = 0; trial < 100; ++trial) {
        const double t = t_dist(rng);
        const int m = n_dist(rng), n = n_dist(rng);
        CHECK(kSixth.iterate(t, m + n) == kSixth.iterate(kSixth.iterate(t, n), m));
    }

    // for the linear function the iterates have a closed form
    for (int n = 0; n <= 30; ++n) {
        CHECK(kSixth.iterate(1.5, n) ==
              doctest::Approx(1.5 / std::pow(6.0, n)).epsilon(1e-12));
        if (n > 0) CHECK(kSixth.iterate(1.5, n) <= kSixth.iterate(1.5, n - 1));
    }

    const ComparisonFn blowup{[](double t) { return std::exp(t); }, 1.0};
    CHECK_THROWS_AS(blowup.iterate(100.0, 3), EvaluationError);
}
