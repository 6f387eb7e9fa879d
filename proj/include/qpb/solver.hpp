#pragma once

#include <optional>
#include <vector>

#include "qpb/hypothesis.hpp"

namespace qpb {

struct LedgerEntry {
    double observed = 0.0;   // max{q(x_{n+1},x_n), q(x_n,x_{n+1})}
    double bound = 0.0;      // psi^n(max of the two step-0 distances)
    bool satisfied = true;
};

/// The generated sequence with its per-step distances in both orders, the
/// self-distances, the geometric-envelope ledger and exact ball membership.
struct IterationTrace {
    std::vector<Point> points;
    std::vector<double> q_fwd;        // q(x_n, x_{n+1})
    std::vector<double> q_bwd;        // q(x_{n+1}, x_n)
    std::vector<double> q_self;       // q(x_n, x_n), one per point
    std::vector<LedgerEntry> ledger;  // one per step
    std::vector<bool> in_ball;        // one per point, q(x0, x_n) <= radius + slack
};

enum class SolveStatus {
    CommonFixedPoint,
    FixedPointOfUOnly,
    NoConvergence,
    LeftBallEscape,
};

std::string to_string(SolveStatus s);

/// Distances between the final point and its images under both maps, in
/// both orders. All four must vanish for a common fixed point.
struct Residuals {
    double u_fwd = 0.0;  // q(x, Ux)
    double u_bwd = 0.0;  // q(Ux, x)
    double v_fwd = 0.0;  // q(x, Vx)
    double v_bwd = 0.0;  // q(Vx, x)

    double max_value() const;
};

struct CauchyDiagnostics {
    long tail = 0;
    double max_fwd = 0.0;  // max q(x_m, x_n) over m <= n in the tail window
    double max_bwd = 0.0;  // max q(x_n, x_m) over the same pairs
    double tol = 0.0;
    bool below_tol = false;
};

struct SolveResult {
    SolveStatus status = SolveStatus::NoConvergence;
    std::optional<Point> limit;
    long iterations = 0;
    Residuals residuals;
    IterationTrace trace;
    CauchyDiagnostics cauchy;
    std::optional<long> escape_index;
};

struct SolveOptions {
    long max_iter = 10000;
    double tol = 1e-9;
    long cauchy_tail = 10;
    double cauchy_tol = 1e-6;
    // membership defaults to the ball around the scenario's start; the
    // uniqueness probe pins it there while varying the initial point
    std::optional<Point> ball_center;
};

/// Runs the alternating iteration x1 = U x0, x2 = V x1, x3 = U x2, ...
/// Stops when both one-sided successive distances are within tol, then
/// verifies all four residuals at the final point against the zero
/// tolerance (that, not the self-distance, is what identifies a common
/// fixed point here: q(x,x) may be positive away from fixed points).
/// Ball membership is tested against the exact predicate
/// q(x0, x_n) <= radius + slack; an escaping iterate stops the run.
SolveResult solve(const Scenario& sc, const SolveOptions& opts = {});

/// Witnesses every step n where max{q_bwd[n], q_fwd[n]} exceeds
/// psi^n(max{q_bwd[0], q_fwd[0]}) beyond the slack. The step index is
/// recorded in the witness clause.
ViolationReport verify_ledger(const IterationTrace& trace, const ComparisonFn& psi,
                              const Tolerances& tol = {});

/// Pairwise distances over the last `tail` trace points, as numerical
/// evidence for the double-limit in the Cauchy definition. No limit claim
/// is made: small maxima do not imply a limit exists in the space.
CauchyDiagnostics cauchy_diagnostics(const IterationTrace& trace, const QpbSpace& space,
                                     long tail, double tol = 1e-6);

/// Limits reached from several starts, deduplicated under the point
/// tolerance, with the pairwise dominance guard between distinct limits.
/// When every pair passes the guard the limit set should be a singleton;
/// `contradiction` flags the scenario when it is not.
struct UniquenessProbe {
    std::vector<Point> fixed_points;
    std::vector<std::vector<bool>> pairwise_guard;
    bool unique_claim_applicable = false;
    bool contradiction = false;
    std::vector<SolveStatus> statuses;
};

UniquenessProbe uniqueness_probe(const Scenario& sc, const Region& starts,
                                 const SolveOptions& opts = {});

enum class SolveMode {
    SingleMap,  // V := U on the same space
    Metric,     // additionally requires s = 1, symmetric distance, zero self-distance
    DeltaOnly,  // dominance pair runs with phi == 1
};

/// Single-map front end. Metric mode verifies symmetry and zero
/// self-distance on the materialized ball grid before solving and throws
/// ConfigError with the witnesses otherwise.
SolveResult solve_single_map(const Scenario& sc, SolveMode mode,
                             const SolveOptions& opts = {}, int resolution = 41);

}  // namespace qpb
