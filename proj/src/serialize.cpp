#include "qpb/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace qpb {

namespace {

using nlohmann::json;

std::vector<Witness> sorted_witnesses(const ViolationReport& r) {
    std::vector<Witness> ws = r.witnesses;
    std::stable_sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) {
        if (a.margin != b.margin) return a.margin > b.margin;
        return a.points < b.points;
    });
    return ws;
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json trace_row(const IterationTrace& trace, std::size_t n) {
    json row;
    row["n"] = n;
    row["x"] = trace.points[n];
    const bool has_step = n < trace.q_fwd.size();
    row["q_fwd"] = has_step ? json(trace.q_fwd[n]) : json();
    row["q_bwd"] = has_step ? json(trace.q_bwd[n]) : json();
    row["q_self"] = trace.q_self[n];
    row["psi_bound"] = n < trace.ledger.size() ? json(trace.ledger[n].bound) : json();
    row["in_ball"] = static_cast<bool>(trace.in_ball[n]);
    return row;
}

}  // namespace

void to_json(json& j, const Witness& w) {
    j = json{{"points", w.points}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"margin", w.margin}};
    if (w.clause != 0) j["clause"] = w.clause;
}

void to_json(json& j, const ViolationReport& r) {
    j = json{{"predicate", r.predicate},
             {"passed", r.passed()},
             {"checked", r.checked},
             {"witnesses", sorted_witnesses(r)}};
    if (r.skipped) j["skipped"] = *r.skipped;
}

void to_json(json& j, const SeriesEvidence& e) {
    j = json{{"t", e.t},
             {"s", e.s},
             {"partial_sums", e.partial_sums},
             {"term_ratios", e.term_ratios},
             {"verdict", to_string(e.verdict)}};
}

void to_json(json& j, const RadiusBoundEvidence& e) {
    j = json{{"t0", e.t0},
             {"bound", e.bound},
             {"partial_sums", e.partial_sums},
             {"passed", e.passed},
             {"first_violation", e.first_violation}};
}

void to_json(json& j, const CompositeReport& r) {
    j = json{{"scenario", r.scenario},
             {"ball_size", r.ball_size},
             {"axioms", r.axioms},
             {"dominance_U", r.dominance_u},
             {"dominance_V", r.dominance_v},
             {"triangular", r.triangular},
             {"psi",
              json{{"monotone", r.psi.monotone},
                   {"strict_contraction", r.psi.strict_contraction},
                   {"series", r.psi.series}}},
             {"cond1", r.cond1},
             {"cond2", r.cond2},
             {"cond3", r.cond3},
             {"verdict", r.verdict}};
}

void to_json(json& j, const Residuals& r) {
    j = json{{"u_fwd", r.u_fwd}, {"u_bwd", r.u_bwd}, {"v_fwd", r.v_fwd},
             {"v_bwd", r.v_bwd}};
}

void to_json(json& j, const CauchyDiagnostics& d) {
    j = json{{"tail", d.tail},
             {"max_fwd", d.max_fwd},
             {"max_bwd", d.max_bwd},
             {"tol", d.tol},
             {"below_tol", d.below_tol}};
}

void to_json(json& j, const SolveResult& r) {
    j = json{{"status", to_string(r.status)},
             {"limit", r.limit ? json(*r.limit) : json()},
             {"iterations", r.iterations},
             {"residuals", r.residuals},
             {"cauchy", r.cauchy},
             {"escape_index", r.escape_index ? json(*r.escape_index) : json()}};
    json rows = json::array();
    for (std::size_t n = 0; n < r.trace.points.size(); ++n)
        rows.push_back(trace_row(r.trace, n));
    j["trace"] = std::move(rows);
}

void to_json(json& j, const TableCell& c) {
    j = json{{"table", c.table},   {"case", c.case_label}, {"cell", c.cell},
             {"sample", c.sample}, {"stated", c.stated},   {"evaluated", c.evaluated},
             {"agrees", c.agrees}};
}

void to_json(json& j, const TableInstance& i) {
    j = json{{"case", i.case_label},
             {"sample", i.sample},
             {"lhs", i.lhs},
             {"rhs", i.rhs},
             {"holds", i.holds}};
}

void to_json(json& j, const TableReport& r) {
    j = json{{"cells", r.cells},
             {"instances", r.instances},
             {"discrepancies", r.discrepancies},
             {"all_agree", r.all_agree()}};
}

json catalog_listing() {
    json listing = json::array();
    for (const CatalogEntry& e : all_entries()) {
        listing.push_back(json{{"name", e.name},
                               {"domain", e.scenario.domain.description},
                               {"s", e.expected.s},
                               {"epsilon", e.expected.epsilon},
                               {"notes", e.expected.notes}});
    }
    return listing;
}

void write_trace_csv(std::ostream& os, const IterationTrace& trace) {
    os << "n,x,q_fwd,q_bwd,q_self,psi_bound,in_ball\n";
    for (std::size_t n = 0; n < trace.points.size(); ++n) {
        const bool has_step = n < trace.q_fwd.size();
        os << n << ',' << fmt_double(trace.points[n]) << ',';
        if (has_step) os << fmt_double(trace.q_fwd[n]);
        os << ',';
        if (has_step) os << fmt_double(trace.q_bwd[n]);
        os << ',' << fmt_double(trace.q_self[n]) << ',';
        if (n < trace.ledger.size()) os << fmt_double(trace.ledger[n].bound);
        os << ',' << (trace.in_ball[n] ? "true" : "false") << '\n';
    }
}

void write_trace_jsonl(std::ostream& os, const IterationTrace& trace) {
    for (std::size_t n = 0; n < trace.points.size(); ++n)
        os << trace_row(trace, n).dump() << '\n';
}

}  // namespace qpb
