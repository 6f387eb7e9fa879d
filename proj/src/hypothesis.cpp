#include "qpb/hypothesis.hpp"

#include <cmath>
#include <sstream>

namespace qpb {

namespace {

Point checked_map(const std::function<Point(Point)>& map, Point x, const Domain& domain,
                  const char* name) {
    const Point y = map(x);
    if (!std::isfinite(y) || !domain.contains(y)) {
        std::ostringstream os;
        os.precision(17);
        os << name << " maps x = " << x << " outside the domain (to " << y << ")";
        throw EvaluationError(os.str());
    }
    return y;
}

}  // namespace

void Scenario::validate() const {
    if (!domain.contains(start)) throw ConfigError("start point is outside the domain");
    if (!(radius > 0.0)) throw ConfigError("radius must be positive");
    if (space.s < 1.0) throw ConfigError("coefficient s must be at least 1");
    if (space.s != psi.claimed_s)
        throw ConfigError("comparison function is claimed for a different coefficient");
}

double contraction_majorant(const Scenario& sc, Point x, Point y) {
    const auto& q = sc.space.dist;
    const Point ux = checked_map(sc.map_u, x, sc.domain, "U");
    const Point vy = checked_map(sc.map_v, y, sc.domain, "V");
    const double bracket = (checked_dist(q, x, vy) + checked_dist(q, y, ux) -
                            checked_dist(q, x, x)) /
                           (2.0 * sc.space.s);
    return std::max(std::max(checked_dist(q, x, y), checked_dist(q, x, ux)),
                    std::max(checked_dist(q, y, vy), bracket));
}

ViolationReport check_contraction_condition(const Scenario& sc, const Region& region) {
    const auto& q = sc.space.dist;
    const std::vector<Point>& pts = region.points;
    const std::size_t n = pts.size();

    std::vector<Point> u_img(n), v_img(n);
    for (std::size_t i = 0; i < n; ++i) {
        u_img[i] = checked_map(sc.map_u, pts[i], sc.domain, "U");
        v_img[i] = checked_map(sc.map_v, pts[i], sc.domain, "V");
    }

    ViolationReport report;
    report.predicate = "contraction-condition";
    long skipped = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!dominance_guard(sc.dominance, pts[i], pts[j], sc.tol)) {
                ++skipped;
                continue;
            }
            ++report.checked;
            const double lhs = std::max(checked_dist(q, u_img[i], v_img[j]),
                                        checked_dist(q, v_img[j], u_img[i]));
            const double rhs = sc.psi(contraction_majorant(sc, pts[i], pts[j]));
            if (lhs > rhs + sc.tol.slack)
                report.witnesses.push_back({{pts[i], pts[j]}, lhs, rhs, lhs - rhs, 0});
        }
    }
    report.skipped = skipped;
    return report;
}

ViolationReport check_cross_bound(const Scenario& sc, const Region& region) {
    const auto& q = sc.space.dist;
    const std::vector<Point>& pts = region.points;
    const std::size_t n = pts.size();

    std::vector<Point> u_img(n), v_img(n);
    for (std::size_t i = 0; i < n; ++i) {
        u_img[i] = checked_map(sc.map_u, pts[i], sc.domain, "U");
        v_img[i] = checked_map(sc.map_v, pts[i], sc.domain, "V");
    }

    ViolationReport report;
    report.predicate = "cross-bound";
    report.checked = static_cast<long>(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double lhs = checked_dist(q, v_img[j], u_img[i]);
            const double rhs = checked_dist(q, pts[i], pts[j]);
            if (lhs > rhs + sc.tol.slack)
                report.witnesses.push_back({{pts[i], pts[j]}, lhs, rhs, lhs - rhs, 0});
        }
    }
    return report;
}

RadiusBoundEvidence check_radius_bound(const Scenario& sc, int j_max) {
    if (j_max < 0) throw ConfigError("radius bound needs j_max >= 0");
    const auto& q = sc.space.dist;
    const Point ux0 = checked_map(sc.map_u, sc.start, sc.domain, "U");

    RadiusBoundEvidence ev;
    ev.t0 = std::max(checked_dist(q, sc.start, ux0), checked_dist(q, ux0, sc.start));
    ev.bound = sc.radius;
    ev.passed = true;

    // partial sums of s^{i+1} psi^i(t0)
    double psi_it = ev.t0;
    double s_pow = sc.space.s;
    double sum = 0.0;
    for (int j = 0; j <= j_max; ++j) {
        sum += s_pow * psi_it;
        if (!std::isfinite(sum)) throw EvaluationError("partial sum is not finite");
        ev.partial_sums.push_back(sum);
        if (ev.passed && sum > ev.bound + sc.tol.slack) {
            ev.passed = false;
            ev.first_violation = j;
        }
        psi_it = sc.psi(psi_it);
        s_pow *= sc.space.s;
    }
    return ev;
}

CompositeReport check_all(const Scenario& sc, int resolution, int j_max,
                          const std::string& label) {
    sc.validate();

    CompositeReport report;
    report.scenario = label;

    const Region candidates = sc.domain.sample(resolution, sc.tol);
    const Region ball =
        left_closed_ball(sc.space, sc.start, sc.radius, candidates, sc.tol);
    if (ball.empty()) throw ConfigError("materialized ball is empty");
    report.ball_size = static_cast<long>(ball.size());

    report.axioms = check_qpb_axioms(sc.space, ball, sc.tol);
    report.dominance_u =
        check_locally_dominated(sc.dominance, sc.map_u, ball, sc.domain, sc.tol);
    report.dominance_u.predicate = "locally-dominated-U";
    report.dominance_v =
        check_locally_dominated(sc.dominance, sc.map_v, ball, sc.domain, sc.tol);
    report.dominance_v.predicate = "locally-dominated-V";
    report.triangular = check_pair_triangular(sc.dominance, ball, sc.tol);

    std::vector<double> t_grid;
    for (int i = 0; i <= 100; ++i) t_grid.push_back(0.1 * i);
    report.psi.monotone = check_monotone(sc.psi, t_grid, sc.tol);
    report.psi.strict_contraction = check_strict_contraction(
        sc.psi, std::span<const double>(t_grid).subspan(1), sc.tol);

    report.cond1 = check_contraction_condition(sc, ball);
    report.cond2 = check_cross_bound(sc, ball);
    report.cond3 = check_radius_bound(sc, j_max);

    // series probed at the radius-bound base point (or 1 when the start is
    // already fixed, so the verdict is never vacuous)
    const double series_t = report.cond3.t0 > 0.0 ? report.cond3.t0 : 1.0;
    report.psi.series = series_evidence(sc.psi, series_t, j_max < 2 ? 64 : j_max, 0.95, sc.tol);

    report.verdict = report.axioms.passed() && report.dominance_u.passed() &&
                     report.dominance_v.passed() && report.triangular.passed() &&
                     report.psi.passed() && report.cond1.passed() &&
                     report.cond2.passed() && report.cond3.passed;
    return report;
}

}  // namespace qpb
