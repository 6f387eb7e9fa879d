#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "qpb/catalog.hpp"
#include "qpb/serialize.hpp"
#include "qpb/solver.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

qpb::CatalogEntry require_entry(const std::string& name) {
    if (auto entry = qpb::find_entry(name)) return *entry;
    throw py::value_error("unknown scenario: " + name);
}

}  // namespace

PYBIND11_MODULE(_qpb, m) {
    m.doc() = "axiom checks, hypothesis verification and alternating "
              "fixed-point iteration on quasi-partial b-metric spaces";

    py::register_exception<qpb::EvaluationError>(m, "EvaluationError");
    py::register_exception<qpb::ConfigError>(m, "ConfigError");

    m.def("list_scenarios_json", [] { return qpb::catalog_listing().dump(); },
          "catalog listing as a JSON array");

    m.def(
        "check_json",
        [](const std::string& name, int resolution, int j_max) {
            const qpb::CatalogEntry entry = require_entry(name);
            return json(qpb::check_all(entry.scenario, resolution, j_max, entry.name))
                .dump();
        },
        py::arg("name"), py::arg("resolution") = 41, py::arg("j_max") = 64,
        "composite check report as JSON");

    m.def(
        "solve_json",
        [](const std::string& name, double tol, long max_iter) {
            const qpb::CatalogEntry entry = require_entry(name);
            qpb::SolveOptions opts;
            opts.tol = tol;
            opts.max_iter = max_iter;
            json j = qpb::solve(entry.scenario, opts);
            j["scenario"] = entry.name;
            return j.dump();
        },
        py::arg("name"), py::arg("tol") = 1e-9, py::arg("max_iter") = 10000,
        "alternating-iteration result with the full trace, as JSON");

    m.def(
        "verify_tables_json",
        [](const std::string& name) {
            return json(qpb::verify_tables(require_entry(name))).dump();
        },
        py::arg("name"), "cell-by-cell table re-derivation as JSON");

    m.def(
        "ball",
        [](const std::string& name, double center, double radius, int resolution) {
            const qpb::Scenario& sc = require_entry(name).scenario;
            const qpb::Region candidates = sc.domain.sample(resolution, sc.tol);
            return qpb::left_closed_ball(sc.space, center, radius, candidates, sc.tol)
                .points;
        },
        py::arg("name"), py::arg("center"), py::arg("radius"),
        py::arg("resolution") = 41, "materialized left closed ball points");

    m.def(
        "distance",
        [](const std::string& name, double x, double y) {
            return require_entry(name).scenario.space.dist(x, y);
        },
        py::arg("name"), py::arg("x"), py::arg("y"),
        "the scenario's distance q(x, y)");

    m.def(
        "majorant",
        [](const std::string& name, double x, double y) {
            return qpb::contraction_majorant(require_entry(name).scenario, x, y);
        },
        py::arg("name"), py::arg("x"), py::arg("y"),
        "the four-term contraction majorant at (x, y)");

    m.def(
        "guard",
        [](const std::string& name, double x, double y) {
            const qpb::Scenario& sc = require_entry(name).scenario;
            return qpb::dominance_guard(sc.dominance, x, y, sc.tol);
        },
        py::arg("name"), py::arg("x"), py::arg("y"),
        "the symmetric dominance guard at (x, y)");

    m.def(
        "psi_iterate",
        [](const std::string& name, double t, int n) {
            return require_entry(name).scenario.psi.iterate(t, n);
        },
        py::arg("name"), py::arg("t"), py::arg("n"),
        "n-fold application of the scenario's comparison function");
}
