#include <cmath>
#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "qpb/catalog.hpp"
#include "qpb/space.hpp"

using namespace qpb;

namespace {

const CatalogEntry kExample = example1();

QpbSpace standard_metric() {
    return QpbSpace{[](Point x, Point y) { return std::abs(x - y); }, 1.0};
}

Region grid(double lo, double hi, int n) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back(lo + (hi - lo) * i / (n - 1));
    return Region::from_points(std::move(pts), RegionSource::ExplicitGrid);
}

}  // namespace

TEST_CASE("sampler honors endpoint closedness") {
    const Domain half_open{"[0,5)", {Interval{0.0, 5.0, true, false}}};
    const Region r = half_open.sample(10);
    CHECK(r.size() == 50);
    CHECK(r.points.front() == 0.0);
    CHECK(r.points.back() < 5.0);
    CHECK(r.contains(4.0));  // the piece boundary lands on the grid

    const Domain open{"(4,5)", {Interval{4.0, 5.0, false, false}}};
    for (Point p : open.sample(10).points) {
        CHECK(p > 4.0);
        CHECK(p < 5.0);
    }

    const Domain closed{"[0,4]", {Interval{0.0, 4.0, true, true}}};
    const Region rc = closed.sample(10);
    CHECK(rc.points.front() == 0.0);
    CHECK(rc.points.back() == 4.0);
    CHECK(rc.size() == 41);
}

TEST_CASE("region construction dedups under the point tolerance") {
    const Region r =
        Region::from_points({1.0, 0.0, 1.0 + 1e-12, 2.0}, RegionSource::ExplicitGrid);
    CHECK(r.points == std::vector<Point>{0.0, 1.0, 2.0});
}

TEST_CASE("piecewise example satisfies the axioms at s = 2") {
    const Region r = kExample.scenario.domain.sample(10);
    REQUIRE(r.contains(4.0));
    const ViolationReport report = check_qpb_axioms(kExample.scenario.space, r);
    CHECK(report.passed());
    CHECK(report.checked > 0);
}

TEST_CASE("piecewise example fails the relaxed triangle inequality at s = 1") {
    QpbSpace weakened = kExample.scenario.space;
    weakened.s = 1.0;
    const Region triple =
        Region::from_points({4.1, 4.9, 4.5}, RegionSource::ExplicitGrid);
    const ViolationReport report = check_qpb_axioms(weakened, triple);
    REQUIRE_FALSE(report.passed());

    bool found = false;
    for (const Witness& w : report.witnesses) {
        if (w.clause == 4 && w.points == std::vector<double>{4.1, 4.9, 4.5}) {
            found = true;
            CHECK(w.lhs == doctest::Approx(0.64).epsilon(1e-9));
            CHECK(w.rhs == doctest::Approx(0.32).epsilon(1e-9));
            CHECK(w.margin == doctest::Approx(0.32).epsilon(1e-9));
        }
    }
    CHECK(found);
}

TEST_CASE("triangle witnesses persist slightly below the valid coefficient") {
    // the inequality is tight on the upper piece, so shaving the coefficient
    // must produce witnesses at every resolution
    for (int res : {11, 41}) {
        QpbSpace weakened = kExample.scenario.space;
        weakened.s = 1.95;
        const Region r = kExample.scenario.domain.sample(res);
        const ViolationReport report = check_qpb_axioms(weakened, r);
        CHECK_FALSE(report.passed());
    }
}

TEST_CASE("standard metric satisfies both axiom systems") {
    const Region r = grid(-2.0, 2.0, 17);
    CHECK(check_qpb_axioms(standard_metric(), r).passed());
    CHECK(check_dq_axioms(DqSpace{standard_metric().dist}, r).passed());
}

TEST_CASE("axiom checkers agree with the naive oracle") {
    const Region r = kExample.scenario.domain.sample(4);
    REQUIRE(r.size() <= 21);
    const ViolationReport report = check_qpb_axioms(kExample.scenario.space, r);
    CHECK(oracle::canon(report) ==
          oracle::qpb_axioms(kExample.scenario.space.dist, 2.0, r.points, {}));

    QpbSpace weakened = kExample.scenario.space;
    weakened.s = 1.0;
    const ViolationReport failing = check_qpb_axioms(weakened, r);
    CHECK_FALSE(failing.passed());
    CHECK(oracle::canon(failing) ==
          oracle::qpb_axioms(weakened.dist, 1.0, r.points, {}));
}

TEST_CASE("first-argument projection is a valid dislocated quasi-metric") {
    // q(x,y) = x never has q(x,y) = q(y,x) = 0 for distinct points, and the
    // self-distance correction makes the triangle property an identity
    const DqSpace space{[](Point x, Point) { return x; }};
    const Region r = grid(0.0, 1.0, 11);
    const ViolationReport report = check_dq_axioms(space, r);
    CHECK(oracle::canon(report) == oracle::dq_axioms(space.dist, r.points, {}));
    CHECK(report.passed());
}

TEST_CASE("squared distance on the upper piece violates the unrelaxed triangle") {
    const DqSpace view{kExample.scenario.space.dist};
    const Region r = grid(4.1, 4.9, 9);
    const ViolationReport report = check_dq_axioms(view, r);
    CHECK(oracle::canon(report) == oracle::dq_axioms(view.dist, r.points, {}));
    REQUIRE_FALSE(report.passed());

    bool found = false;
    for (const Witness& w : report.witnesses)
        if (w.clause == 2 && w.points == std::vector<double>{4.1, 4.9, 4.5})
            found = true;
    CHECK(found);  // 0.64 > 0.16 + 0.16 - 0
}

TEST_CASE("evaluation errors name the offending pair") {
    const QpbSpace bad{[](Point x, Point y) {
                           return (x == 1.0 && y == 2.0)
                                      ? std::numeric_limits<double>::quiet_NaN()
                                      : std::abs(x - y);
                       },
                       1.0};
    const Region r = Region::from_points({1.0, 2.0}, RegionSource::ExplicitGrid);
    CHECK_THROWS_WITH_AS(check_qpb_axioms(bad, r),
                         doctest::Contains("not finite"), EvaluationError);
}

TEST_CASE("left ball of the piecewise example is the whole lower piece") {
    const Scenario& sc = kExample.scenario;
    const Region candidates = sc.domain.sample(41);
    const Region ball = left_closed_ball(sc.space, 0.5, 4.5, candidates);
    CHECK(ball.source == RegionSource::MaterializedBall);
    REQUIRE_FALSE(ball.empty());
    std::vector<Point> expected;
    for (Point p : candidates.points)
        if (p <= 4.0) expected.push_back(p);
    CHECK(ball.points == expected);
    CHECK(ball.points ==
          oracle::ball_left(sc.space.dist, 0.5, 4.5, candidates.points, {}));
}

TEST_CASE("two-sided ball is the left ball cut at 1.5") {
    // q(y, 1/2) = max{2y, 1/2} + y <= 9/2 exactly when y <= 3/2
    const Scenario& sc = kExample.scenario;
    const Region candidates = sc.domain.sample(10);
    const Region ball = closed_ball(sc.space, 0.5, 4.5, candidates);
    std::vector<Point> expected;
    for (Point p : candidates.points)
        if (p <= 1.5) expected.push_back(p);
    CHECK(ball.points == expected);
    CHECK(ball.points ==
          oracle::ball_both(sc.space.dist, 0.5, 4.5, candidates.points, {}));
}

TEST_CASE("small radii can exclude the ball's own center") {
    const Scenario& sc = kExample.scenario;
    const Region candidates = sc.domain.sample(10);  // contains 0.5
    REQUIRE(candidates.contains(0.5));
    // radius 1 keeps only the center itself: q(1/2, y) >= 3/2 for y != 1/2
    const Region unit = left_closed_ball(sc.space, 0.5, 1.0, candidates);
    CHECK(unit.points == std::vector<Point>{0.5});
    // radius 0 is below the center's own self-distance q(1/2,1/2) = 1/2
    const Region zero = left_closed_ball(sc.space, 0.5, 0.0, candidates);
    CHECK(zero.empty());
    // while a zero-self-distance center keeps itself
    const Region origin = left_closed_ball(sc.space, 0.0, 0.0, candidates);
    CHECK(origin.points == std::vector<Point>{0.0});
}

TEST_CASE("radius-zero ball on a standard metric is the center") {
    const Region candidates = grid(-2.0, 2.0, 17);
    const Region ball = closed_ball(standard_metric(), 0.0, 0.0, candidates);
    CHECK(ball.points == std::vector<Point>{0.0});
    const Region unit = closed_ball(standard_metric(), 0.0, 1.0, candidates);
    for (Point p : unit.points) CHECK(std::abs(p) <= 1.0 + 1e-12);
    CHECK(unit.contains(1.0));
    CHECK(unit.contains(-1.0));
}

TEST_CASE("ball containment and monotonicity over random centers and radii") {
    const Scenario& sc = kExample.scenario;
    const Region candidates = sc.domain.sample(10);
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> center_dist(0.0, 4.0);
    std::uniform_real_distribution<double> radius_dist(0.0, 6.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double c = center_dist(rng);
        double r1 = radius_dist(rng);
        double r2 = radius_dist(rng);
        if (r1 > r2) std::swap(r1, r2);

        const Region both = closed_ball(sc.space, c, r1, candidates);
        const Region left_small = left_closed_ball(sc.space, c, r1, candidates);
        const Region left_big = left_closed_ball(sc.space, c, r2, candidates);
        for (Point p : both.points) CHECK(left_small.contains(p));
        for (Point p : left_small.points) CHECK(left_big.contains(p));
    }
}

TEST_CASE("zero distance identifies points") {
    const Scenario& sc = kExample.scenario;
    CHECK(zero_separation(sc.space, 0.0, 0.0) == Separation::Identified);
    CHECK(zero_separation(sc.space, 1.0, 3.0) == Separation::Separated);

    const QpbSpace tiny{[](Point, Point) { return 0.5e-9; }, 1.0};
    CHECK(zero_separation(tiny, 1.0, 2.0) == Separation::Identified);

    // on the example, self-identification holds exactly at 0 and on the
    // upper piece where the self-distance vanishes
    for (Point p : sc.domain.sample(10).points) {
        const bool identified =
            zero_separation(sc.space, p, p) == Separation::Identified;
        CHECK(identified == (p == 0.0 || p > 4.0));
    }
}
