#pragma once

#include <functional>

#include "qpb/space.hpp"

namespace qpb {

/// The auxiliary weight pair (delta, phi) that gates the contraction
/// condition. Both functions must be total and finite on the tested
/// region; their values may be negative (only the inequalities between
/// them are ever used). Delta-only mode fixes phi to the constant 1.
struct DominancePair {
    enum class Mode { Pair, DeltaOnly };

    std::function<double(Point, Point)> delta;
    std::function<double(Point, Point)> phi;
    Mode mode = Mode::Pair;

    static DominancePair delta_only(std::function<double(Point, Point)> delta);
};

/// A self-map is locally dominated on the region when
/// delta(x, map(x)) >= phi(x, map(x)) at every point; witnesses carry
/// [x, map(x)] with phi on the left-hand side. A map value outside the
/// domain is an evaluation error.
ViolationReport check_locally_dominated(const DominancePair& pair,
                                        const std::function<Point(Point)>& map,
                                        const Region& region, const Domain& domain,
                                        const Tolerances& tol = {});

/// Over all ordered triples: delta >= phi on (x,y) and on (y,z) must force
/// delta >= phi on (x,z). Triples where the antecedent fails impose nothing.
ViolationReport check_pair_triangular(const DominancePair& pair, const Region& region,
                                      const Tolerances& tol = {});

/// The symmetric disjunction under which the contraction condition
/// applies: delta(x,y) >= phi(x,y) or delta(y,x) >= phi(y,x), with slack.
bool dominance_guard(const DominancePair& pair, Point x, Point y,
                     const Tolerances& tol = {});

}  // namespace qpb
