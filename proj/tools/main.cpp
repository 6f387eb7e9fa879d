// qpb — scenario checks, fixed-point solves and ball materialization for
// quasi-partial b-metric spaces.
//
// Exit codes: 0 pass/converged, 1 witnesses found, 2 no convergence or ball
// escape, 3 configuration error. Reports go to stdout (or --out); diagnostics
// go to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpb/catalog.hpp"
#include "qpb/serialize.hpp"
#include "qpb/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitWitnesses = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitConfig = 3;

struct Output {
    std::optional<std::string> path;

    // writes with a trailing newline; file output is byte-stable across runs
    int write(const std::string& payload) const {
        if (path) {
            std::ofstream file(*path, std::ios::binary | std::ios::trunc);
            if (!file) {
                std::cerr << "cannot open output file: " << *path << "\n";
                return kExitConfig;
            }
            file << payload << '\n';
            return kExitPass;
        }
        std::cout << payload << '\n';
        return kExitPass;
    }
};

qpb::CatalogEntry require_entry(const std::string& name) {
    if (auto entry = qpb::find_entry(name)) return *entry;
    throw qpb::ConfigError("unknown scenario: " + name);
}

std::string solve_payload(const qpb::SolveResult& result, const std::string& name,
                          const std::string& format, bool trace_only) {
    if (format == "csv") {
        std::ostringstream os;
        qpb::write_trace_csv(os, result.trace);
        std::string payload = os.str();
        if (!payload.empty() && payload.back() == '\n') payload.pop_back();
        return payload;
    }
    if (trace_only) {
        std::ostringstream os;
        qpb::write_trace_jsonl(os, result.trace);
        std::string payload = os.str();
        if (!payload.empty() && payload.back() == '\n') payload.pop_back();
        return payload;
    }
    json j = result;
    j["scenario"] = name;
    return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"check and solve scenarios on quasi-partial b-metric spaces"};
    app.require_subcommand(1);
    app.footer("The environment variable QPB_SEED is reserved for future "
               "randomized checks and is ignored.");

    std::string scenario_name = "example1";
    int resolution = 41;
    double tol = 1e-9;
    long max_iter = 10000;
    int j_max = 64;
    std::string format = "json";
    std::optional<std::string> out_path;
    double center = 0.0;
    double radius = 0.0;

    CLI::App* cmd_list = app.add_subcommand("list", "list catalog scenarios");
    cmd_list->add_option("--out", out_path, "write the listing to a file");

    CLI::App* cmd_check =
        app.add_subcommand("check", "run every check on a scenario's ball");
    cmd_check->add_option("--scenario", scenario_name, "catalog scenario name");
    cmd_check->add_option("--resolution", resolution, "grid points per unit interval")
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--j-max", j_max, "partial-sum cutoff")
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--out", out_path, "write the report to a file");

    const auto add_solve_flags = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario_name, "catalog scenario name");
        cmd->add_option("--tol", tol, "stop when both successive distances fall below")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-iter", max_iter, "iteration cap")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write the result to a file");
    };
    CLI::App* cmd_solve =
        app.add_subcommand("solve", "run the alternating iteration");
    add_solve_flags(cmd_solve);
    CLI::App* cmd_trace = app.add_subcommand(
        "trace", "run the iteration and dump the per-step ledger");
    add_solve_flags(cmd_trace);

    CLI::App* cmd_ball =
        app.add_subcommand("ball", "materialize a left closed ball");
    cmd_ball->add_option("--scenario", scenario_name, "catalog scenario name");
    cmd_ball->add_option("--center", center, "ball center")->required();
    cmd_ball->add_option("--radius", radius, "ball radius")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_ball->add_option("--resolution", resolution, "grid points per unit interval")
        ->check(CLI::PositiveNumber);
    cmd_ball->add_option("--out", out_path, "write the points to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }

    const Output output{out_path};
    try {
        if (cmd_list->parsed()) {
            return output.write(qpb::catalog_listing().dump(2));
        }
        if (cmd_check->parsed()) {
            const qpb::CatalogEntry entry = require_entry(scenario_name);
            const qpb::CompositeReport report =
                qpb::check_all(entry.scenario, resolution, j_max, entry.name);
            const int rc = output.write(json(report).dump(2));
            if (rc != kExitPass) return rc;
            return report.verdict ? kExitPass : kExitWitnesses;
        }
        if (cmd_solve->parsed() || cmd_trace->parsed()) {
            const qpb::CatalogEntry entry = require_entry(scenario_name);
            qpb::SolveOptions opts;
            opts.max_iter = max_iter;
            opts.tol = tol;
            qpb::SolveResult result;
            try {
                result = qpb::solve(entry.scenario, opts);
            } catch (const qpb::EvaluationError& e) {
                std::cerr << "solve failed: " << e.what() << "\n";
                return kExitNoConvergence;
            }
            const int rc = output.write(solve_payload(result, entry.name, format,
                                                      cmd_trace->parsed()));
            if (rc != kExitPass) return rc;
            std::cerr << "status: " << qpb::to_string(result.status) << " after "
                      << result.iterations << " iterations\n";
            return result.status == qpb::SolveStatus::CommonFixedPoint
                       ? kExitPass
                       : kExitNoConvergence;
        }
        if (cmd_ball->parsed()) {
            const qpb::CatalogEntry entry = require_entry(scenario_name);
            const qpb::Scenario& sc = entry.scenario;
            const qpb::Region candidates = sc.domain.sample(resolution, sc.tol);
            const qpb::Region ball =
                qpb::left_closed_ball(sc.space, center, radius, candidates, sc.tol);
            json j{{"scenario", entry.name},
                   {"center", center},
                   {"radius", radius},
                   {"count", ball.size()},
                   {"points", ball.points}};
            const double self = sc.space.dist(center, center);
            if (self > radius + sc.tol.slack)
                j["note"] = "center excluded: q(center, center) = " +
                            std::to_string(self) + " exceeds the radius";
            return output.write(j.dump(2));
        }
    } catch (const qpb::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qpb::EvaluationError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
