#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "curve.hpp"
#include "npv.hpp"
#include "oracle.hpp"

using namespace breakeven;

TEST_CASE("npv line at the worked example") {
    const auto p = oracle::example_project();
    const NpvLine line = npv_line(p, 0.10);
    CHECK(std::abs(line.intercept - -237560.08) <= 0.5);
    CHECK(line.intercept ==
          doctest::Approx(-237560.08125629173).epsilon(1e-12));
    CHECK(line.slope == doctest::Approx(2.80).epsilon(0.002));
    CHECK(line.slope == doctest::Approx(2.7957780330956305).epsilon(1e-12));

    // r -> infinity: h -> -I, m -> 0
    const NpvLine far = npv_line(p, 1e6);
    CHECK(far.intercept == doctest::Approx(-150000.0).epsilon(1e-6));
    CHECK(far.slope > 0.0);
    CHECK(far.slope < 1e-5);

    CHECK_THROWS_AS(npv_line(p, -1.0), std::domain_error);
    CHECK_THROWS_AS(npv_line(p, -2.0), std::domain_error);
}

TEST_CASE("npv at pinned points") {
    const auto p = oracle::example_project();
    CHECK(std::abs(npv(p, 84971.01, 0.10)) <= 1.0);
    CHECK(npv(p, 100000.0, 0.10) ==
          doctest::Approx(42017.722053271329).epsilon(1e-12));
    CHECK(npv(p, 123456.0, 1e6) == doctest::Approx(-150000.0).epsilon(1e-6));
    CHECK_THROWS_AS(npv(p, -5.0, 0.10), std::domain_error);
}

TEST_CASE("classification against the break-even comparison") {
    const auto p = oracle::example_project();
    const double qf = financial_breakeven(p, 0.10);

    const NpvSign at = classify(p, qf, 0.10);
    CHECK(at.value == Sign::zero);
    CHECK(at.breakeven_quantity == doctest::Approx(qf));

    CHECK(classify(p, 100000.0, 0.10).value == Sign::positive);
    CHECK(classify(p, 0.0, 0.10).value == Sign::negative);
}

TEST_CASE("partial derivatives at the worked example") {
    const auto p = oracle::example_project();
    const auto partials = npv_partials(p, 100000.0, 0.10);
    CHECK(partials.wrt_quantity == doctest::Approx(2.80).epsilon(0.002));
    CHECK(partials.wrt_rate < 0.0);

    const double fd = oracle::central_difference(
        [&](double r) { return npv(p, 100000.0, r); }, 0.10, 1e-7);
    CHECK(oracle::close_rel(partials.wrt_rate, fd, 1e-6));

    // at Q = 0 the NPV reduces to h(r), so the rate partial is h'(r);
    // the example project has increasing h
    const auto at_zero = npv_partials(p, 0.0, 0.10);
    const double h_fd = oracle::central_difference(
        [&](double r) { return npv_line(p, r).intercept; }, 0.10, 1e-7);
    CHECK(at_zero.wrt_rate > 0.0);
    CHECK(oracle::close_rel(at_zero.wrt_rate, h_fd, 1e-6));
}

TEST_CASE("h monotonicity classification") {
    CHECK(h_monotonicity(oracle::example_project()) == Trend::increasing);

    // A t_e = C_f (1 - t_e): h stays at -I
    const auto constant =
        ProjectParams::validate(150000, 10, 3.70, 3.00, 15000, 0.5);
    CHECK(h_monotonicity(constant) == Trend::constant);
    for (double r : {0.01, 0.1, 1.0, 10.0})
        CHECK(npv_line(constant, r).intercept ==
              doctest::Approx(-150000.0).epsilon(1e-12));

    const auto no_fixed =
        ProjectParams::validate(150000, 10, 3.70, 3.00, 0.0, 0.35);
    CHECK(h_monotonicity(no_fixed) == Trend::decreasing);
}

TEST_CASE("oracle equivalence of the closed form") {
    oracle::ParamGen gen(13u);
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.next();
        const double q = gen.uniform(0.0, 5e5);
        const double r = gen.uniform(1e-6, 5.0);
        const double closed = npv(p, q, r);
        const double summed = oracle::npv_sum(p, q, r);
        CAPTURE(q);
        CAPTURE(r);
        CHECK(oracle::close_scaled(
            closed, summed, 1e-9,
            std::max({1.0, std::abs(summed), p.initial_outlay()})));
    }
}

TEST_CASE("factored form m (Q - Q_f) matches") {
    oracle::ParamGen gen(17u);
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.next();
        const double q = gen.uniform(0.0, 5e5);
        const double r = gen.uniform(1e-3, 5.0);
        const NpvLine line = npv_line(p, r);
        const double qf = financial_breakeven(p, r);
        const double factored = line.slope * (q - qf);
        const double scale =
            p.initial_outlay() + line.slope * (q + qf) + 1.0;
        CHECK(oracle::close_scaled(npv(p, q, r), factored, 1e-9, scale));
    }
}

TEST_CASE("limits at r -> 0") {
    const auto p = oracle::example_project();
    // NPV(Q, 0+) = n (p - C_v)(1 - t_e)(Q - Q_c)
    const double q = 100000.0;
    const double limit =
        p.years() * p.after_tax_margin() * (q - accounting_breakeven(p));
    CHECK(oracle::close_rel(npv(p, q, 1e-9), limit, 1e-5));

    // h(0+) = -(1 - t_e) n (A + C_f)
    const double h_limit = -(1.0 - p.tax_rate()) * p.years() *
                           (p.amortization() + p.fixed_costs());
    CHECK(oracle::close_rel(npv_line(p, 1e-9).intercept, h_limit, 1e-6));
}

TEST_CASE("monotone in Q, antitone in r beyond the asymptote intercept") {
    oracle::ParamGen gen(19u);
    for (int i = 0; i < 100; ++i) {
        const auto p = gen.next();
        const double r = gen.uniform(0.01, 2.0);
        const double a = coeff_a(p);
        // increasing in Q everywhere
        double prev = npv(p, 0.0, r);
        for (double q = 1e3; q <= 1e6; q *= 10.0) {
            const double cur = npv(p, q, r);
            CHECK(cur > prev);
            prev = cur;
        }
        // decreasing in r for quantities above a (below it the h' term can
        // dominate and flip the slope, cf. the partials contract)
        const double q = std::max(0.0, a) * 1.5 + 1e3;
        double prev_r = npv(p, q, 0.01);
        for (double rr = 0.1; rr <= 10.0; rr *= 2.0) {
            const double cur = npv(p, q, rr);
            CHECK(cur < prev_r);
            prev_r = cur;
        }
    }
}

TEST_CASE("sign trichotomy agrees with the break-even comparison") {
    oracle::ParamGen gen(23u);
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.next();
        const double r = gen.uniform(1e-3, 3.0);
        const double qf = financial_breakeven(p, r);
        const double q = gen.uniform(0.0, 3.0) * qf;
        const NpvSign sign = classify(p, q, r);
        if (sign.value == Sign::positive) CHECK(q > qf);
        if (sign.value == Sign::negative) CHECK(q < qf);
        // the zero band is scale-aware: |NPV| <= 1e-6 max(1, I)
        if (sign.value == Sign::zero)
            CHECK(std::abs(sign.npv) <= zero_tolerance(p));
    }
}
