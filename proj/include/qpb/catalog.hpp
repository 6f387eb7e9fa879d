#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qpb/hypothesis.hpp"

namespace qpb {

struct ExpectedOutcome {
    bool axioms_pass = true;
    std::optional<Point> fixed_point;
    double epsilon = 0.0;
    double s = 1.0;
    std::vector<std::string> notes;
};

/// A named, fully wired scenario with its documented expectations.
struct CatalogEntry {
    std::string name;
    Scenario scenario;
    ExpectedOutcome expected;
};

/// The bundled worked example: the piecewise asymmetric distance on [0,5)
/// with coefficient s = 2,
///
///   q(x,y) = x            if x,y in [0,4] and x = y
///          = 3x           if x in (4,5) and y in [0,4]
///          = (x-y)^2      if x,y in (4,5)
///          = max{2x,y}+x  otherwise,
///
/// the mapping pair U x = sin(x/2)/6, V x = log(x+1)/6 on [0,4] (x^2 and
/// e^x off it), the weight pair delta = cos((x+y)/4), phi = sin((x+y)/4)
/// on [0,4]^2 (log(x+y) and e^{x+y} off it), psi(t) = t/6, start 1/2 and
/// radius 9/2.
CatalogEntry example1();

/// Control scenarios with known verdicts: a plain Banach contraction on a
/// standard metric, a broken distance that goes negative, and a
/// non-contractive comparison function.
std::vector<CatalogEntry> controls();

/// example1 followed by the controls, in fixed order.
const std::vector<CatalogEntry>& all_entries();

/// Looks an entry up by name.
std::optional<CatalogEntry> find_entry(const std::string& name);

/// One table cell: the closed-form value a reference table states for a
/// case, against what the implemented distance evaluates to on
/// case-conforming sample points.
struct TableCell {
    int table = 0;
    std::string case_label;
    std::string cell;
    std::vector<double> sample;
    double stated = 0.0;
    double evaluated = 0.0;
    bool agrees = false;
};

/// For the triple table, whether the relaxed triangle inequality actually
/// holds on the sample triple (computed from evaluated distances).
struct TableInstance {
    std::string case_label;
    std::vector<double> sample;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

struct TableReport {
    std::vector<TableCell> cells;
    std::vector<TableInstance> instances;
    long discrepancies = 0;

    bool all_agree() const { return discrepancies == 0; }
};

/// Re-derives the three verification tables that accompany the worked
/// example and reports cell-by-cell agreement with the implemented
/// distance. Known outcome: the self-distance rows for the upper branch
/// and two cross-branch cells disagree with the piecewise definition; the
/// report surfaces them instead of matching the tables literally.
TableReport verify_tables(const CatalogEntry& entry, const Tolerances& tol = {});

}  // namespace qpb
