#include "qpb/comparison.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qpb {

double ComparisonFn::operator()(double t) const {
    const double v = fn(t);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os.precision(17);
        os << "comparison function is not finite at t = " << t;
        throw EvaluationError(os.str());
    }
    return v;
}

double ComparisonFn::iterate(double t, int n) const {
    if (n < 0) throw ConfigError("iterate count must be nonnegative");
    double v = t;
    for (int i = 0; i < n; ++i) v = (*this)(v);
    return v;
}

ViolationReport check_monotone(const ComparisonFn& f, std::span<const double> grid,
                               const Tolerances& tol) {
    ViolationReport report;
    report.predicate = "psi-monotone";
    if (grid.empty()) return report;
    report.checked = static_cast<long>(grid.size()) - 1;
    double prev = f(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur = f(grid[i]);
        if (cur < prev - tol.slack)
            report.witnesses.push_back(
                {{grid[i - 1], grid[i]}, prev, cur, prev - cur, 0});
        prev = cur;
    }
    return report;
}

ViolationReport check_strict_contraction(const ComparisonFn& f,
                                         std::span<const double> grid,
                                         const Tolerances& tol) {
    ViolationReport report;
    report.predicate = "psi-strict-contraction";
    report.checked = static_cast<long>(grid.size());
    for (double t : grid) {
        if (t <= 0.0)
            throw ConfigError("strict-contraction grid must be strictly positive");
        const double v = f(t);
        if (v >= t - tol.slack)
            report.witnesses.push_back({{t}, v, t, v - t, 0});
    }
    return report;
}

std::string to_string(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::ConvergentEvidence: return "convergent-evidence";
        case SeriesVerdict::DivergentEvidence: return "divergent-evidence";
        case SeriesVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

SeriesEvidence series_evidence(const ComparisonFn& f, double t, int j_max,
                               double ratio_bound, const Tolerances& tol) {
    if (j_max < 2) throw ConfigError("series evidence needs j_max >= 2");
    if (t < 0.0) throw ConfigError("series evidence needs t >= 0");

    SeriesEvidence ev;
    ev.t = t;
    ev.s = f.claimed_s;

    // terms a_i = s^i * psi^i(t)
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(j_max) + 1);
    double psi_it = t;
    double s_pow = 1.0;
    double sum = 0.0;
    for (int i = 0; i <= j_max; ++i) {
        const double a = s_pow * psi_it;
        if (!std::isfinite(a)) throw EvaluationError("series term is not finite");
        terms.push_back(a);
        sum += a;
        if (!std::isfinite(sum)) throw EvaluationError("partial sum is not finite");
        ev.partial_sums.push_back(sum);
        psi_it = f(psi_it);
        s_pow *= f.claimed_s;
    }
    for (int i = 0; i < j_max; ++i) {
        double ratio;
        if (terms[i] > 0.0)
            ratio = terms[i + 1] / terms[i];
        else
            ratio = terms[i + 1] > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        ev.term_ratios.push_back(ratio);
    }

    bool all_zero = true;
    for (double a : terms)
        if (a != 0.0) { all_zero = false; break; }
    if (all_zero) {
        ev.verdict = SeriesVerdict::ConvergentEvidence;
        return ev;
    }

    // first index from which every ratio stays within the bound
    int settle = j_max;
    for (int i = j_max - 1; i >= 0; --i) {
        if (ev.term_ratios[i] <= ratio_bound)
            settle = i;
        else
            break;
    }
    const bool tail_settled =
        terms.back() <= tol.slack * std::max(1.0, std::abs(ev.partial_sums.back()));
    if (settle <= j_max / 2 && tail_settled) {
        ev.verdict = SeriesVerdict::ConvergentEvidence;
        return ev;
    }

    bool non_decreasing_tail = terms.back() > 0.0;
    for (int i = j_max / 2; i < j_max && non_decreasing_tail; ++i)
        if (ev.term_ratios[i] < 1.0 - tol.slack) non_decreasing_tail = false;
    ev.verdict = non_decreasing_tail ? SeriesVerdict::DivergentEvidence
                                     : SeriesVerdict::Inconclusive;
    return ev;
}

}  // namespace qpb
