#pragma once

#include <functional>
#include <string>

#include "qpb/comparison.hpp"
#include "qpb/dominance.hpp"
#include "qpb/space.hpp"

namespace qpb {

/// A complete problem instance: the space, the mapping pair, the dominance
/// pair, the comparison function, the start point and the ball radius.
struct Scenario {
    QpbSpace space;
    std::function<Point(Point)> map_u;
    std::function<Point(Point)> map_v;
    DominancePair dominance;
    ComparisonFn psi;
    Point start = 0.0;
    double radius = 0.0;
    Domain domain;
    Tolerances tol;

    /// Throws ConfigError when the wiring is inconsistent (start outside
    /// the domain, nonpositive radius, coefficient mismatch).
    void validate() const;
};

/// The four-term majorant the contraction condition is tested against:
/// max{ q(x,y), q(x,Ux), q(y,Vy), [q(x,Vy)+q(y,Ux)-q(x,x)]/(2s) }.
double contraction_majorant(const Scenario& sc, Point x, Point y);

/// Condition 1: for every ordered pair in the region that passes the
/// dominance guard, max{q(Ux,Vy), q(Vy,Ux)} <= psi(majorant) + slack.
/// Pairs failing the guard are skipped and counted in `skipped`, so a
/// vacuous pass is visible in the report.
ViolationReport check_contraction_condition(const Scenario& sc, const Region& region);

/// Condition 2: q(Vy, Ux) <= q(x, y) + slack over all ordered pairs.
ViolationReport check_cross_bound(const Scenario& sc, const Region& region);

/// Condition 3 evidence: partial sums of sum_{i<=j} s^{i+1} psi^i(t0) with
/// t0 = max{q(x0,Ux0), q(Ux0,x0)}, each required to stay within the radius.
struct RadiusBoundEvidence {
    double t0 = 0.0;
    double bound = 0.0;
    std::vector<double> partial_sums;
    bool passed = false;
    long first_violation = -1;
};

RadiusBoundEvidence check_radius_bound(const Scenario& sc, int j_max = 64);

struct PsiReport {
    ViolationReport monotone;
    ViolationReport strict_contraction;
    SeriesEvidence series;

    bool passed() const {
        return monotone.passed() && strict_contraction.passed() &&
               series.verdict == SeriesVerdict::ConvergentEvidence;
    }
};

/// Everything that can be checked about a scenario on its materialized
/// ball, aggregated. `verdict` is true only when every sub-report passed.
struct CompositeReport {
    std::string scenario;
    long ball_size = 0;
    ViolationReport axioms;
    ViolationReport dominance_u;
    ViolationReport dominance_v;
    ViolationReport triangular;
    PsiReport psi;
    ViolationReport cond1;
    ViolationReport cond2;
    RadiusBoundEvidence cond3;
    bool verdict = false;
};

/// Materializes the left closed ball at the given per-unit resolution and
/// runs the axiom, dominance, triangularity, comparison-function and
/// condition checks on it.
CompositeReport check_all(const Scenario& sc, int resolution, int j_max = 64,
                          const std::string& label = "");

}  // namespace qpb
