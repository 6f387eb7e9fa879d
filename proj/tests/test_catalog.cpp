#include <cmath>

#include <doctest.h>

#include "qpb/catalog.hpp"
#include "qpb/space.hpp"

using namespace qpb;

TEST_CASE("piecewise distance branch values") {
    const auto& q = example1().scenario.space.dist;
    CHECK(q(1.0, 3.0) == 4.0);    // distinct lower pair: max{2,3} + 1
    CHECK(q(3.0, 1.0) == 9.0);    // max{6,1} + 3
    CHECK(q(4.5, 3.0) == 13.5);   // upper-to-lower: 3x
    CHECK(q(2.0, 2.0) == 2.0);    // lower diagonal
    CHECK(q(0.0, 0.0) == 0.0);
    CHECK(q(4.5, 4.5) == 0.0);    // upper diagonal
    CHECK(q(4.5, 4.7) == doctest::Approx(0.04).epsilon(1e-9));
    CHECK(q(4.0, 4.0) == 4.0);    // the boundary 4 belongs to the lower piece
    CHECK(q(4.0, 4.5) == 12.0);   // max{8, 4.5} + 4
    CHECK(q(0.0, 1.0) == 1.0);
}

TEST_CASE("map and weight branch values") {
    const Scenario& sc = example1().scenario;
    CHECK(sc.map_u(0.5) == doctest::Approx(0.041233993209087154).epsilon(1e-15));
    CHECK(sc.map_v(0.5) == doctest::Approx(std::log(1.5) / 6.0).epsilon(1e-15));
    CHECK(sc.map_u(4.5) == 20.25);                 // x^2 off the lower piece
    CHECK(sc.map_v(4.5) == doctest::Approx(std::exp(4.5)).epsilon(1e-15));
    CHECK(sc.dominance.delta(0.0, 0.0) == 1.0);    // cos 0
    CHECK(sc.dominance.phi(0.0, 0.0) == 0.0);      // sin 0
    CHECK(sc.dominance.delta(4.0, 4.5) == doctest::Approx(std::log(8.5)));
    CHECK(sc.dominance.phi(4.0, 4.5) == doctest::Approx(std::exp(8.5)));
    CHECK(sc.psi.fn(3.0) == 0.5);
    CHECK(sc.psi.claimed_s == 2.0);
}

TEST_CASE("catalog wiring and determinism") {
    const auto& entries = all_entries();
    REQUIRE(entries.size() == 4);
    CHECK(entries[0].name == "example1");
    CHECK(find_entry("banach-control").has_value());
    CHECK(find_entry("broken-control").has_value());
    CHECK(find_entry("psi-identity-control").has_value());
    CHECK_FALSE(find_entry("nosuch").has_value());

    const CatalogEntry a = example1();
    const CatalogEntry b = example1();
    CHECK(a.expected.epsilon == 4.5);
    CHECK(a.expected.s == 2.0);
    CHECK(*a.expected.fixed_point == 0.0);
    for (double x : {0.0, 0.5, 2.0, 4.0, 4.3, 4.9})
        for (double y : {0.0, 0.5, 2.0, 4.0, 4.3, 4.9}) {
            CHECK(a.scenario.space.dist(x, y) == b.scenario.space.dist(x, y));
            CHECK(a.scenario.map_u(x) == b.scenario.map_u(x));
            CHECK(a.scenario.map_v(x) == b.scenario.map_v(x));
        }
    CHECK(a.expected.notes == b.expected.notes);
    for (const CatalogEntry& e : entries) e.scenario.validate();
}

TEST_CASE("every catalog space marked valid passes its axioms") {
    for (const CatalogEntry& e : all_entries()) {
        if (!e.expected.axioms_pass) continue;
        for (int res : {11, 41}) {
            const Region r = e.scenario.domain.sample(res);
            CHECK(check_qpb_axioms(e.scenario.space, r, e.scenario.tol).passed());
        }
    }
}

TEST_CASE("the broken control is rejected as a modeling error") {
    const auto broken = find_entry("broken-control");
    REQUIRE(broken);
    const Region r = broken->scenario.domain.sample(5);
    CHECK_THROWS_AS(check_qpb_axioms(broken->scenario.space, r), EvaluationError);
}

TEST_CASE("the identity comparison control fails the contraction checks") {
    const auto entry = find_entry("psi-identity-control");
    REQUIRE(entry);
    const std::vector<double> grid{0.5, 1.0, 2.0};
    const ViolationReport r =
        check_strict_contraction(entry->scenario.psi, grid);
    CHECK(r.witnesses.size() == grid.size());
}

TEST_CASE("table re-derivation agrees where the definition says it should") {
    const TableReport report = verify_tables(example1());

    // table 1 matches the definition in every case
    for (const TableCell& c : report.cells)
        if (c.table == 1) CHECK(c.agrees);

    // table 2, upper/lower case: the printed self-distance x disagrees with
    // the definition's 0 on the upper diagonal
    bool case4_self = false;
    for (const TableCell& c : report.cells) {
        if (c.table == 2 && c.case_label.find("case IV") == 0 && c.cell == "q(x,x)") {
            case4_self = true;
            CHECK_FALSE(c.agrees);
            CHECK(c.stated == 4.2);
            CHECK(c.evaluated == 0.0);
        }
    }
    CHECK(case4_self);

    // the printed tables disagree with the definition in exactly four cells
    CHECK(report.discrepancies == 4);
    CHECK_FALSE(report.all_agree());

    // every sampled triangle instance still holds at s = 2
    for (const TableInstance& inst : report.instances) CHECK(inst.holds);

    // the all-upper triple is the tight one: 0.64 <= 2(0.16 + 0.16) - 0
    bool tight = false;
    for (const TableInstance& inst : report.instances) {
        if (inst.sample == std::vector<double>{4.1, 4.9, 4.5}) {
            tight = true;
            CHECK(inst.lhs == doctest::Approx(0.64).epsilon(1e-9));
            CHECK(inst.rhs == doctest::Approx(0.64).epsilon(1e-9));
        }
    }
    CHECK(tight);

    // spot check: the all-upper pair row matches the definition exactly
    for (const TableCell& c : report.cells)
        if (c.table == 1 && c.case_label.find("case II ") == 0) CHECK(c.agrees);
}
