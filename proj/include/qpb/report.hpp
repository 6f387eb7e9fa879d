#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpb {

/// Numerical tolerances shared by every checker and the solver.
///
/// point_eq  — two points closer than this are the same point
/// zero      — a distance at or below this counts as zero (fixed-point test)
/// slack     — allowance added to inequality checks so double rounding
///             cannot manufacture witnesses
struct Tolerances {
    double point_eq = 1e-9;
    double zero = 1e-9;
    double slack = 1e-12;
};

/// A point (or pair/triple) at which a checked predicate fails, together
/// with both sides of the failed inequality. `margin` is oriented so a
/// genuine violation is positive. `clause` tags the sub-predicate for
/// multi-part checks (axiom number, ledger index); 0 when there is only one.
struct Witness {
    std::vector<double> points;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    long clause = 0;
};

/// Result of exhaustively evaluating a predicate over a finite region.
/// `checked` counts evaluated instances; `skipped` is set only by checks
/// that are gated on a guard and counts the pairs the guard excluded.
struct ViolationReport {
    std::string predicate;
    long checked = 0;
    std::optional<long> skipped;
    std::vector<Witness> witnesses;

    bool passed() const { return witnesses.empty(); }
};

/// A distance, map or auxiliary function produced a value the model rules
/// out (non-finite, negative distance, point outside the domain).
class EvaluationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad run configuration: unknown scenario, invalid parameters, or a
/// precondition failure detected before solving (optionally with the
/// witnesses that prove it).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
    ConfigError(const std::string& what, ViolationReport report)
        : std::runtime_error(what), report_(std::move(report)) {}

    const std::optional<ViolationReport>& report() const { return report_; }

  private:
    std::optional<ViolationReport> report_;
};

}  // namespace qpb
