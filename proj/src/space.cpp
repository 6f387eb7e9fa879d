#include "qpb/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qpb {

namespace {

std::string describe_pair(Point x, Point y) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << x << ", " << y << ")";
    return os.str();
}

// Distance matrix over a region, every entry validated.
std::vector<double> distance_matrix(const std::function<double(Point, Point)>& dist,
                                    const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i * n + j] = checked_dist(dist, pts[i], pts[j]);
    return d;
}

}  // namespace

double checked_dist(const std::function<double(Point, Point)>& dist, Point x, Point y) {
    const double v = dist(x, y);
    if (!std::isfinite(v))
        throw EvaluationError("distance is not finite at " + describe_pair(x, y));
    if (v < 0.0)
        throw EvaluationError("distance is negative at " + describe_pair(x, y));
    return v;
}

Region Region::from_points(std::vector<Point> pts, RegionSource source,
                           const Tolerances& tol) {
    std::sort(pts.begin(), pts.end());
    std::vector<Point> unique;
    unique.reserve(pts.size());
    for (Point p : pts) {
        if (unique.empty() || !points_equal(unique.back(), p, tol)) unique.push_back(p);
    }
    return Region{std::move(unique), source};
}

bool Region::contains(Point x, const Tolerances& tol) const {
    for (Point p : points)
        if (points_equal(p, x, tol)) return true;
    return false;
}

bool Domain::contains(Point x) const {
    for (const Interval& piece : pieces)
        if (piece.contains(x)) return true;
    return false;
}

Region Domain::sample(int resolution, const Tolerances& tol) const {
    if (resolution < 1) throw ConfigError("sampling resolution must be positive");
    std::vector<Point> pts;
    for (const Interval& piece : pieces) {
        const double len = piece.length();
        const long cells = std::max(1L, std::lround(len * resolution));
        if (piece.closed_lo && piece.closed_hi) {
            for (long k = 0; k <= cells; ++k)
                pts.push_back(piece.lo + static_cast<double>(k) * len / static_cast<double>(cells));
        } else if (piece.closed_lo) {  // [lo, hi)
            for (long k = 0; k < cells; ++k)
                pts.push_back(piece.lo + static_cast<double>(k) * len / static_cast<double>(cells));
        } else if (piece.closed_hi) {  // (lo, hi]
            for (long k = 1; k <= cells; ++k)
                pts.push_back(piece.lo + static_cast<double>(k) * len / static_cast<double>(cells));
        } else {  // (lo, hi): interior points only
            const long n = std::max(1L, cells - 1);
            for (long k = 1; k <= n; ++k)
                pts.push_back(piece.lo + static_cast<double>(k) * len / static_cast<double>(n + 1));
        }
    }
    Region region = Region::from_points(std::move(pts), RegionSource::ExplicitGrid, tol);
    for (Point p : region.points) {
        if (!contains(p))
            throw EvaluationError("sampler produced a point outside the domain");
    }
    return region;
}

ViolationReport check_qpb_axioms(const QpbSpace& space, const Region& region,
                                 const Tolerances& tol) {
    if (region.empty()) throw ConfigError("axiom check requires a nonempty region");
    const std::vector<Point>& pts = region.points;
    const std::size_t n = pts.size();
    const std::vector<double> d = distance_matrix(space.dist, pts);

    ViolationReport report;
    report.predicate = "qpb-axioms";
    report.checked = static_cast<long>(3 * n * n + n * n * n);

    for (std::size_t i = 0; i < n; ++i) {
        const double dii = d[i * n + i];
        for (std::size_t j = 0; j < n; ++j) {
            const double dij = d[i * n + j];
            const double dji = d[j * n + i];
            const double djj = d[j * n + j];
            // 1: coincident distances force coincident points
            if (std::abs(dij - dii) <= tol.slack && std::abs(dij - djj) <= tol.slack &&
                !points_equal(pts[i], pts[j], tol)) {
                report.witnesses.push_back(
                    {{pts[i], pts[j]}, std::abs(pts[i] - pts[j]), tol.point_eq,
                     std::abs(pts[i] - pts[j]) - tol.point_eq, 1});
            }
            // 2: q(x,x) <= q(x,y);  3: q(x,x) <= q(y,x)
            if (dii > dij + tol.slack)
                report.witnesses.push_back({{pts[i], pts[j]}, dii, dij, dii - dij, 2});
            if (dii > dji + tol.slack)
                report.witnesses.push_back({{pts[i], pts[j]}, dii, dji, dii - dji, 3});
        }
    }
    // 4: q(x,y) <= s(q(x,z)+q(z,y)) - q(z,z)
    const double s = space.s;
    for (std::size_t i = 0; i < n; ++i) {
        const double* row_i = &d[i * n];
        for (std::size_t k = 0; k < n; ++k) {
            const double* row_k = &d[k * n];
            const double dik = row_i[k];
            const double dkk = row_k[k];
            for (std::size_t j = 0; j < n; ++j) {
                const double rhs = s * (dik + row_k[j]) - dkk;
                if (row_i[j] > rhs + tol.slack)
                    report.witnesses.push_back(
                        {{pts[i], pts[j], pts[k]}, row_i[j], rhs, row_i[j] - rhs, 4});
            }
        }
    }
    return report;
}

ViolationReport check_dq_axioms(const DqSpace& space, const Region& region,
                                const Tolerances& tol) {
    if (region.empty()) throw ConfigError("axiom check requires a nonempty region");
    const std::vector<Point>& pts = region.points;
    const std::size_t n = pts.size();
    const std::vector<double> d = distance_matrix(space.dist, pts);

    ViolationReport report;
    report.predicate = "dq-axioms";
    report.checked = static_cast<long>(n * (n - 1) / 2 + n * n * n);

    // (i) q(x,y) = q(y,x) = 0 forces x = y
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d[i * n + j] <= tol.zero && d[j * n + i] <= tol.zero &&
                !points_equal(pts[i], pts[j], tol)) {
                report.witnesses.push_back(
                    {{pts[i], pts[j]}, std::abs(pts[i] - pts[j]), tol.point_eq,
                     std::abs(pts[i] - pts[j]) - tol.point_eq, 1});
            }
        }
    }
    // (ii) q(x,y) <= q(x,z) + q(z,y) - q(z,z)
    for (std::size_t i = 0; i < n; ++i) {
        const double* row_i = &d[i * n];
        for (std::size_t k = 0; k < n; ++k) {
            const double* row_k = &d[k * n];
            const double dik = row_i[k];
            const double dkk = row_k[k];
            for (std::size_t j = 0; j < n; ++j) {
                const double rhs = dik + row_k[j] - dkk;
                if (row_i[j] > rhs + tol.slack)
                    report.witnesses.push_back(
                        {{pts[i], pts[j], pts[k]}, row_i[j], rhs, row_i[j] - rhs, 2});
            }
        }
    }
    return report;
}

Region left_closed_ball(const QpbSpace& space, Point center, double radius,
                        const Region& candidates, const Tolerances& tol) {
    std::vector<Point> members;
    for (Point y : candidates.points) {
        if (checked_dist(space.dist, center, y) <= radius + tol.slack)
            members.push_back(y);
    }
    return Region{std::move(members), RegionSource::MaterializedBall};
}

Region closed_ball(const QpbSpace& space, Point center, double radius,
                   const Region& candidates, const Tolerances& tol) {
    std::vector<Point> members;
    for (Point y : candidates.points) {
        if (checked_dist(space.dist, center, y) <= radius + tol.slack &&
            checked_dist(space.dist, y, center) <= radius + tol.slack)
            members.push_back(y);
    }
    return Region{std::move(members), RegionSource::MaterializedBall};
}

Separation zero_separation(const QpbSpace& space, Point x, Point y,
                           const Tolerances& tol) {
    return checked_dist(space.dist, x, y) <= tol.zero ? Separation::Identified
                                                      : Separation::Separated;
}

}  // namespace qpb
