#include "qpb/dominance.hpp"

#include <cmath>
#include <sstream>

namespace qpb {

namespace {

double checked_weight(const std::function<double(Point, Point)>& w, Point x, Point y,
                      const char* what) {
    const double v = w(x, y);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os.precision(17);
        os << what << " is not finite at (" << x << ", " << y << ")";
        throw EvaluationError(os.str());
    }
    return v;
}

}  // namespace

DominancePair DominancePair::delta_only(std::function<double(Point, Point)> delta) {
    return DominancePair{std::move(delta), [](Point, Point) { return 1.0; },
                         Mode::DeltaOnly};
}

ViolationReport check_locally_dominated(const DominancePair& pair,
                                        const std::function<Point(Point)>& map,
                                        const Region& region, const Domain& domain,
                                        const Tolerances& tol) {
    ViolationReport report;
    report.predicate = "locally-dominated";
    report.checked = static_cast<long>(region.size());
    for (Point x : region.points) {
        const Point y = map(x);
        if (!std::isfinite(y)) {
            std::ostringstream os;
            os.precision(17);
            os << "map value is not finite at x = " << x;
            throw EvaluationError(os.str());
        }
        if (!domain.contains(y)) {
            std::ostringstream os;
            os.precision(17);
            os << "map leaves the domain at x = " << x << " (maps to " << y << ")";
            throw EvaluationError(os.str());
        }
        const double d = checked_weight(pair.delta, x, y, "delta");
        const double p = checked_weight(pair.phi, x, y, "phi");
        if (d < p - tol.slack) report.witnesses.push_back({{x, y}, p, d, p - d, 0});
    }
    return report;
}

ViolationReport check_pair_triangular(const DominancePair& pair, const Region& region,
                                      const Tolerances& tol) {
    const std::vector<Point>& pts = region.points;
    const std::size_t n = pts.size();

    // delta >= phi decided once per ordered pair, then pure logic on triples
    std::vector<double> dval(n * n), pval(n * n);
    std::vector<char> ge(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = checked_weight(pair.delta, pts[i], pts[j], "delta");
            const double p = checked_weight(pair.phi, pts[i], pts[j], "phi");
            dval[i * n + j] = d;
            pval[i * n + j] = p;
            ge[i * n + j] = d >= p - tol.slack;
        }
    }

    ViolationReport report;
    report.predicate = "pair-triangular";
    report.checked = static_cast<long>(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!ge[i * n + j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (!ge[j * n + k]) continue;
                if (!ge[i * n + k]) {
                    const double p = pval[i * n + k];
                    const double d = dval[i * n + k];
                    report.witnesses.push_back(
                        {{pts[i], pts[j], pts[k]}, p, d, p - d, 0});
                }
            }
        }
    }
    return report;
}

bool dominance_guard(const DominancePair& pair, Point x, Point y,
                     const Tolerances& tol) {
    const auto holds = [&](Point a, Point b) {
        return checked_weight(pair.delta, a, b, "delta") >=
               checked_weight(pair.phi, a, b, "phi") - tol.slack;
    };
    return holds(x, y) || holds(y, x);
}

}  // namespace qpb
