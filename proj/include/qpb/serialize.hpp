#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qpb/catalog.hpp"
#include "qpb/solver.hpp"

namespace qpb {

// Reports serialize with witnesses sorted by descending margin (ties by
// points) so output is deterministic regardless of enumeration order.
void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const ViolationReport& r);
void to_json(nlohmann::json& j, const SeriesEvidence& e);
void to_json(nlohmann::json& j, const RadiusBoundEvidence& e);
void to_json(nlohmann::json& j, const CompositeReport& r);
void to_json(nlohmann::json& j, const Residuals& r);
void to_json(nlohmann::json& j, const CauchyDiagnostics& d);
void to_json(nlohmann::json& j, const SolveResult& r);
void to_json(nlohmann::json& j, const TableCell& c);
void to_json(nlohmann::json& j, const TableInstance& i);
void to_json(nlohmann::json& j, const TableReport& r);

/// The catalog listing: [{name, domain, s, epsilon, notes}].
nlohmann::json catalog_listing();

/// Trace rows n, x, q_fwd, q_bwd, q_self, psi_bound, in_ball. The final
/// point has no outgoing step, so its q_fwd/q_bwd/psi_bound are null (JSON)
/// or empty (CSV).
void write_trace_csv(std::ostream& os, const IterationTrace& trace);
void write_trace_jsonl(std::ostream& os, const IterationTrace& trace);

}  // namespace qpb
