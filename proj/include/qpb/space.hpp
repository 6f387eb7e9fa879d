#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpb/report.hpp"

namespace qpb {

/// Points are real numbers; everything that needs identity compares them
/// through the configured tolerance instead of operator==.
using Point = double;

inline bool points_equal(Point a, Point b, const Tolerances& tol = {}) {
    return (a >= b ? a - b : b - a) <= tol.point_eq;
}

/// One interval piece of a domain. Open endpoints are excluded from
/// membership and are never emitted by the sampler.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool closed_lo = true;
    bool closed_hi = true;

    bool contains(Point x) const {
        if (closed_lo ? x < lo : x <= lo) return false;
        if (closed_hi ? x > hi : x >= hi) return false;
        return true;
    }
    double length() const { return hi - lo; }
};

enum class RegionSource { ExplicitGrid, MaterializedBall };

/// A finite, ordered, duplicate-free set of points. Checkers quantify
/// over regions; balls materialize into them.
struct Region {
    std::vector<Point> points;
    RegionSource source = RegionSource::ExplicitGrid;

    /// Sorts and removes duplicates under the point tolerance.
    static Region from_points(std::vector<Point> pts, RegionSource source,
                              const Tolerances& tol = {});

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    bool contains(Point x, const Tolerances& tol = {}) const;
};

/// A union of intervals on the real line with a grid sampler.
struct Domain {
    std::string description;
    std::vector<Interval> pieces;

    bool contains(Point x) const;

    /// Samples `resolution` points per unit of interval length. Closed
    /// endpoints always land on the grid; open endpoints never do.
    Region sample(int resolution, const Tolerances& tol = {}) const;
};

/// A distance function together with its relaxation coefficient s >= 1.
/// The distance must be total, deterministic, finite and nonnegative on
/// the domain; checkers treat anything else as an evaluation error, not
/// as a witness.
struct QpbSpace {
    std::function<double(Point, Point)> dist;
    double s = 1.0;
};

/// A distance function checked against the two dislocated quasi-metric
/// properties (zero distance both ways identifies points; triangle
/// inequality with the self-distance correction).
struct DqSpace {
    std::function<double(Point, Point)> dist;
};

/// Evaluates dist(x, y) and rejects non-finite or negative values.
double checked_dist(const std::function<double(Point, Point)>& dist, Point x, Point y);

/// Checks the four axioms over the region: identity from coincident
/// distances (clause 1), self-distance minimality in both orders
/// (clauses 2 and 3 over ordered pairs), and the relaxed triangle
/// inequality q(x,y) <= s(q(x,z)+q(z,y)) - q(z,z) (clause 4 over ordered
/// triples). A pair or triple becomes a witness only when it violates its
/// inequality by more than the slack.
ViolationReport check_qpb_axioms(const QpbSpace& space, const Region& region,
                                 const Tolerances& tol = {});

/// Same evaluation scheme for the two dislocated quasi-metric properties:
/// clause 1 over unordered pairs, clause 2 over ordered triples.
ViolationReport check_dq_axioms(const DqSpace& space, const Region& region,
                                const Tolerances& tol = {});

/// { y in candidates : q(center, y) <= radius + slack }. May be empty;
/// in particular the center itself is excluded when q(center, center)
/// exceeds the radius.
Region left_closed_ball(const QpbSpace& space, Point center, double radius,
                        const Region& candidates, const Tolerances& tol = {});

/// As left_closed_ball but requiring both q(center, y) and q(y, center)
/// to be within the radius.
Region closed_ball(const QpbSpace& space, Point center, double radius,
                   const Region& candidates, const Tolerances& tol = {});

enum class Separation { Identified, Separated };

/// Zero-distance identification: q(x,y) within the zero tolerance forces
/// x == y in these spaces, so this is the solver's fixed-point equality test.
Separation zero_separation(const QpbSpace& space, Point x, Point y,
                           const Tolerances& tol = {});

}  // namespace qpb
