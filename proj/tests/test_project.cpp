#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "oracle.hpp"
#include "project.hpp"

using namespace breakeven;

TEST_CASE("worked example validates with derived amortization") {
    const auto p = oracle::example_project();
    CHECK(p.amortization() == 15000.0);
    CHECK(p.contribution_margin() == doctest::Approx(0.70).epsilon(1e-14));
    CHECK(p.after_tax_margin() == doctest::Approx(0.455).epsilon(1e-14));
}

TEST_CASE("validation reports every violated constraint") {
    CHECK_THROWS_WITH_AS(
        ProjectParams::validate(150000, 10, 3.00, 3.00, 30000, 0.35),
        doctest::Contains("price must exceed variable_cost"),
        validation_error);
    CHECK_THROWS_WITH_AS(
        ProjectParams::validate(150000, 10, 3.70, 3.00, 30000, 1.0),
        doctest::Contains("tax_rate"), validation_error);

    try {
        ProjectParams::validate(-1, 1, 2.0, 3.0, -5.0, 1.5);
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        CHECK(e.issues().size() == 5); // I, n, p<=Cv, Cf, te
    }

    CHECK_THROWS_AS(
        ProjectParams::validate(std::nan(""), 10, 3.7, 3.0, 30000, 0.35),
        validation_error);

    // boundary cases the formulas allow
    CHECK_NOTHROW(ProjectParams::validate(150000, 10, 3.7, 3.0, 0.0, 0.0));
    CHECK_NOTHROW(ProjectParams::validate(1e-6, 2, 1.5, 1.0, 0.0, 0.999));
}

TEST_CASE("net cash flow at pinned points") {
    const auto p = oracle::example_project();
    CHECK(net_cash_flow(p, 100000.0) == doctest::Approx(31250.0));
    CHECK(net_cash_flow(p, 0.0) == doctest::Approx(-14250.0));
    const auto zero_tax =
        ProjectParams::validate(150000, 10, 3.70, 3.00, 0.0, 0.0);
    CHECK(net_cash_flow(zero_tax, 0.0) == 0.0);
    CHECK_THROWS_AS(net_cash_flow(p, -1.0), std::domain_error);
}

TEST_CASE("EBT at pinned points") {
    const auto p = oracle::example_project();
    CHECK(std::abs(ebt(p, accounting_breakeven(p))) <= 0.01);
    CHECK(ebt(p, 100000.0) == doctest::Approx(25000.0));
    CHECK(ebt(p, 0.0) == doctest::Approx(-45000.0));
}

TEST_CASE("accounting break-even") {
    const auto p = oracle::example_project();
    CHECK(accounting_breakeven(p) ==
          doctest::Approx(64285.714285714286).epsilon(1e-12));
    // C_f + A equal to the margin gives exactly one unit
    const auto unit = ProjectParams::validate(3.0, 2, 4.0, 1.0, 1.5, 0.0);
    CHECK(accounting_breakeven(unit) == doctest::Approx(1.0).epsilon(1e-14));
    // vanishing numerator limit
    const auto tiny = ProjectParams::validate(1e-9, 10, 3.7, 3.0, 0.0, 0.35);
    CHECK(accounting_breakeven(tiny) > 0.0);
    CHECK(accounting_breakeven(tiny) <= 1e-8);
}

TEST_CASE("asymptote coefficients at pinned points") {
    const auto p = oracle::example_project();
    CHECK(coeff_a(p) == doctest::Approx(31318.681318681319).epsilon(1e-12));
    CHECK(coeff_b(p) == doctest::Approx(329670.32967032967).epsilon(1e-12));

    const auto zero_tax =
        ProjectParams::validate(150000, 10, 3.70, 3.00, 30000, 0.0);
    CHECK(coeff_a(zero_tax) ==
          doctest::Approx(30000.0 / 0.70).epsilon(1e-12));
}

TEST_CASE("a + b/n recovers the accounting break-even") {
    oracle::ParamGen gen(3u);
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.next();
        const double recovered = coeff_a(p) + coeff_b(p) / p.years();
        CHECK(oracle::close_rel(recovered, accounting_breakeven(p), 1e-10));
    }
}

TEST_CASE("cash flow and EBT identities") {
    oracle::ParamGen gen(5u);
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.next();
        const double q = gen.uniform(0.0, 2e5);
        // F = (1 - t_e) EBT + A links the two per-year displays
        const double via_ebt =
            (1.0 - p.tax_rate()) * ebt(p, q) + p.amortization();
        CHECK(oracle::close_scaled(net_cash_flow(p, q), via_ebt, 1e-12,
                                   std::abs(via_ebt) + p.amortization() +
                                       p.fixed_costs() + 1.0));
        CHECK(coeff_b(p) > 0.0);
        // sign of a equals the sign of C_f(1 - t_e) - A t_e
        const double disc = p.fixed_costs() * (1.0 - p.tax_rate()) -
                            p.amortization() * p.tax_rate();
        if (disc != 0.0) CHECK(coeff_a(p) * disc >= 0.0);
    }
}
