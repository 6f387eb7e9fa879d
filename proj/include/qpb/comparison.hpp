#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qpb/report.hpp"

namespace qpb {

/// A candidate comparison function psi: [0,inf) -> [0,inf) together with
/// the coefficient s it is claimed to work under. Membership in the
/// admissible class is never proven here, only supported or refuted by
/// the checks below.
struct ComparisonFn {
    std::function<double(double)> fn;
    double claimed_s = 1.0;

    /// Evaluates psi(t); non-finite output is an evaluation error.
    double operator()(double t) const;

    /// n-fold self-application; n = 0 is the identity.
    double iterate(double t, int n) const;
};

/// Witnesses every adjacent pair of the ascending grid where psi decreases
/// by more than the slack.
ViolationReport check_monotone(const ComparisonFn& f, std::span<const double> grid,
                               const Tolerances& tol = {});

/// Witnesses every t in the (strictly positive) grid with psi(t) >= t - slack.
ViolationReport check_strict_contraction(const ComparisonFn& f,
                                         std::span<const double> grid,
                                         const Tolerances& tol = {});

enum class SeriesVerdict { ConvergentEvidence, DivergentEvidence, Inconclusive };

std::string to_string(SeriesVerdict v);

/// Partial sums of sum_i s^i psi^i(t) with consecutive-term ratios.
/// Convergence of the infinite series is not decidable from finitely many
/// terms, so the verdict is graded evidence, never a proof claim.
struct SeriesEvidence {
    double t = 0.0;
    double s = 1.0;
    std::vector<double> partial_sums;
    std::vector<double> term_ratios;
    SeriesVerdict verdict = SeriesVerdict::Inconclusive;
};

/// Computes partial sums up to j_max terms. Convergent evidence requires
/// the term ratios to stay at or below ratio_bound from some index in the
/// first half onward and the tail to be settled within the slack;
/// divergent evidence requires the terms to stop decreasing.
SeriesEvidence series_evidence(const ComparisonFn& f, double t, int j_max = 64,
                               double ratio_bound = 0.95, const Tolerances& tol = {});

}  // namespace qpb
