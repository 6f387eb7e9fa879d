#include "qpb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qpb {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::CommonFixedPoint: return "common-fixed-point";
        case SolveStatus::FixedPointOfUOnly: return "fixed-point-of-U-only";
        case SolveStatus::NoConvergence: return "no-convergence";
        case SolveStatus::LeftBallEscape: return "left-ball-escape";
    }
    return "no-convergence";
}

double Residuals::max_value() const {
    return std::max(std::max(u_fwd, u_bwd), std::max(v_fwd, v_bwd));
}

namespace {

Point apply_map(const std::function<Point(Point)>& map, Point x, const Domain& domain,
                const char* name, long step) {
    const Point y = map(x);
    if (!std::isfinite(y) || !domain.contains(y)) {
        std::ostringstream os;
        os.precision(17);
        os << name << " left the domain";
        if (step >= 0) os << " at iteration " << step;
        os << " (x = " << x << " maps to " << y << ")";
        throw EvaluationError(os.str());
    }
    return y;
}

Residuals residuals_at(const Scenario& sc, Point x) {
    const auto& q = sc.space.dist;
    const Point ux = apply_map(sc.map_u, x, sc.domain, "U", -1);
    const Point vx = apply_map(sc.map_v, x, sc.domain, "V", -1);
    return Residuals{checked_dist(q, x, ux), checked_dist(q, ux, x),
                     checked_dist(q, x, vx), checked_dist(q, vx, x)};
}

}  // namespace

SolveResult solve(const Scenario& sc, const SolveOptions& opts) {
    sc.validate();
    if (opts.max_iter < 1) throw ConfigError("max_iter must be at least 1");
    if (!(opts.tol > 0.0)) throw ConfigError("tol must be positive");

    const auto& q = sc.space.dist;
    const Point center = opts.ball_center.value_or(sc.start);
    SolveResult result;
    IterationTrace& trace = result.trace;

    trace.points.push_back(sc.start);
    trace.q_self.push_back(checked_dist(q, sc.start, sc.start));
    trace.in_ball.push_back(checked_dist(q, center, sc.start) <=
                            sc.radius + sc.tol.slack);

    // the start may already be a common fixed point
    result.residuals = residuals_at(sc, sc.start);
    if (result.residuals.max_value() <= sc.tol.zero) {
        result.status = SolveStatus::CommonFixedPoint;
        result.limit = sc.start;
        result.iterations = 0;
        result.cauchy = cauchy_diagnostics(trace, sc.space,
                                           std::min<long>(opts.cauchy_tail, 1),
                                           opts.cauchy_tol);
        return result;
    }

    double ledger_base = 0.0;
    Point cur = sc.start;
    result.status = SolveStatus::NoConvergence;

    for (long n = 0; n < opts.max_iter; ++n) {
        const bool even = n % 2 == 0;
        const Point next = apply_map(even ? sc.map_u : sc.map_v, cur, sc.domain,
                                     even ? "U" : "V", n + 1);
        const double q_fwd = checked_dist(q, cur, next);
        const double q_bwd = checked_dist(q, next, cur);
        if (n == 0) ledger_base = std::max(q_fwd, q_bwd);

        trace.points.push_back(next);
        trace.q_fwd.push_back(q_fwd);
        trace.q_bwd.push_back(q_bwd);
        trace.q_self.push_back(checked_dist(q, next, next));
        const double observed = std::max(q_fwd, q_bwd);
        const double bound = sc.psi.iterate(ledger_base, static_cast<int>(n));
        trace.ledger.push_back({observed, bound, observed <= bound + sc.tol.slack});

        // exact membership predicate, not the materialized grid
        const bool inside =
            checked_dist(q, center, next) <= sc.radius + sc.tol.slack;
        trace.in_ball.push_back(inside);
        result.iterations = n + 1;

        if (!inside) {
            // the escaped point is no candidate limit; residuals stay those
            // of the start, and applying the maps out there could even leave
            // the domain
            result.status = SolveStatus::LeftBallEscape;
            result.escape_index = n + 1;
            break;
        }

        if (observed <= opts.tol) {
            result.residuals = residuals_at(sc, next);
            const Residuals& r = result.residuals;
            if (r.max_value() <= sc.tol.zero) {
                result.status = SolveStatus::CommonFixedPoint;
                result.limit = next;
            } else if (r.u_fwd <= sc.tol.zero && r.u_bwd <= sc.tol.zero) {
                result.status = SolveStatus::FixedPointOfUOnly;
                result.limit = next;
            } else {
                result.status = SolveStatus::NoConvergence;
            }
            break;
        }
        cur = next;
        if (n + 1 == opts.max_iter) result.residuals = residuals_at(sc, next);
    }

    result.cauchy = cauchy_diagnostics(
        trace, sc.space,
        std::min<long>(opts.cauchy_tail, static_cast<long>(trace.points.size())),
        opts.cauchy_tol);
    return result;
}

ViolationReport verify_ledger(const IterationTrace& trace, const ComparisonFn& psi,
                              const Tolerances& tol) {
    if (trace.points.empty()) throw ConfigError("trace is empty");
    ViolationReport report;
    report.predicate = "psi-ledger";
    const std::size_t steps = std::min(trace.q_fwd.size(), trace.q_bwd.size());
    report.checked = static_cast<long>(steps);
    if (steps == 0) return report;

    const double base = std::max(trace.q_fwd[0], trace.q_bwd[0]);
    for (std::size_t n = 0; n < steps; ++n) {
        const double observed = std::max(trace.q_fwd[n], trace.q_bwd[n]);
        const double bound = psi.iterate(base, static_cast<int>(n));
        if (observed > bound + tol.slack) {
            const Point a = n < trace.points.size() ? trace.points[n] : 0.0;
            const Point b = n + 1 < trace.points.size() ? trace.points[n + 1] : 0.0;
            report.witnesses.push_back(
                {{a, b}, observed, bound, observed - bound, static_cast<long>(n)});
        }
    }
    return report;
}

CauchyDiagnostics cauchy_diagnostics(const IterationTrace& trace, const QpbSpace& space,
                                     long tail, double tol) {
    const long len = static_cast<long>(trace.points.size());
    if (tail < 1 || tail > len) throw ConfigError("tail must be within the trace length");

    CauchyDiagnostics diag;
    diag.tail = tail;
    diag.tol = tol;
    const long begin = len - tail;
    for (long m = begin; m < len; ++m) {
        for (long n = m; n < len; ++n) {
            diag.max_fwd = std::max(
                diag.max_fwd, checked_dist(space.dist, trace.points[static_cast<std::size_t>(m)],
                                           trace.points[static_cast<std::size_t>(n)]));
            diag.max_bwd = std::max(
                diag.max_bwd, checked_dist(space.dist, trace.points[static_cast<std::size_t>(n)],
                                           trace.points[static_cast<std::size_t>(m)]));
        }
    }
    diag.below_tol = diag.max_fwd <= tol && diag.max_bwd <= tol;
    return diag;
}

UniquenessProbe uniqueness_probe(const Scenario& sc, const Region& starts,
                                 const SolveOptions& opts) {
    if (starts.empty()) throw ConfigError("uniqueness probe needs at least one start");

    UniquenessProbe probe;
    SolveOptions run_opts = opts;
    run_opts.ball_center = sc.start;  // the ball stays where the scenario put it
    for (Point x0 : starts.points) {
        Scenario run = sc;
        run.start = x0;
        const SolveResult result = solve(run, run_opts);
        probe.statuses.push_back(result.status);
        if (!result.limit) continue;
        const Point limit = *result.limit;
        bool known = false;
        for (Point seen : probe.fixed_points)
            if (points_equal(seen, limit, sc.tol)) { known = true; break; }
        if (!known) probe.fixed_points.push_back(limit);
    }

    const std::size_t m = probe.fixed_points.size();
    probe.pairwise_guard.assign(m, std::vector<bool>(m, true));
    probe.unique_claim_applicable = true;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const bool ok =
                sc.dominance.delta(probe.fixed_points[i], probe.fixed_points[j]) >=
                sc.dominance.phi(probe.fixed_points[i], probe.fixed_points[j]) -
                    sc.tol.slack;
            probe.pairwise_guard[i][j] = ok;
            if (!ok) probe.unique_claim_applicable = false;
        }
    }
    probe.contradiction = probe.unique_claim_applicable && m > 1;
    return probe;
}

SolveResult solve_single_map(const Scenario& sc, SolveMode mode,
                             const SolveOptions& opts, int resolution) {
    Scenario run = sc;
    run.map_v = run.map_u;

    if (mode == SolveMode::Metric) {
        const Region candidates = run.domain.sample(resolution, run.tol);
        const Region ball =
            left_closed_ball(run.space, run.start, run.radius, candidates, run.tol);

        ViolationReport report;
        report.predicate = "metric-preconditions";
        const std::vector<Point>& pts = ball.points;
        report.checked =
            static_cast<long>(pts.size() * (pts.size() - 1) / 2 + pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double self = checked_dist(run.space.dist, pts[i], pts[i]);
            if (self > run.tol.zero)
                report.witnesses.push_back({{pts[i]}, self, 0.0, self, 2});
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const double fwd = checked_dist(run.space.dist, pts[i], pts[j]);
                const double bwd = checked_dist(run.space.dist, pts[j], pts[i]);
                if (std::abs(fwd - bwd) > run.tol.slack)
                    report.witnesses.push_back(
                        {{pts[i], pts[j]}, fwd, bwd, std::abs(fwd - bwd), 1});
            }
        }
        if (!report.passed())
            throw ConfigError("space fails metric-mode preconditions", std::move(report));
        if (run.space.s != 1.0)
            throw ConfigError("metric mode requires coefficient s = 1");
    } else if (mode == SolveMode::DeltaOnly) {
        run.dominance = DominancePair::delta_only(run.dominance.delta);
    }
    return solve(run, opts);
}

}  // namespace qpb
