#include "curve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include "annuity.hpp"
#include "errors.hpp"

namespace breakeven {
namespace {

void check_rate_nonnegative(double rate) {
    if (!std::isfinite(rate) || rate < 0.0)
        throw std::domain_error(
            "discount rate must be finite and >= 0; got " +
            std::to_string(rate));
}

} // namespace

double financial_breakeven(const ProjectParams& params, double rate) {
    check_rate_nonnegative(rate);
    return coeff_a(params) +
           coeff_b(params) * annuity_reciprocal(rate, params.years());
}

double breakeven_derivative(const ProjectParams& params, double rate) {
    check_rate_nonnegative(rate);
    const double factor = annuity_factor(rate, params.years());
    const double reciprocal_slope =
        -annuity_derivative(rate, params.years()) / (factor * factor);
    return coeff_b(params) * reciprocal_slope;
}

std::pair<double, double> asymptote(const ProjectParams& params) {
    return {coeff_a(params), coeff_b(params)};
}

double gap_to_accounting(const ProjectParams& params, double rate) {
    if (!std::isfinite(rate) || rate <= 0.0)
        throw std::domain_error("discount rate must be > 0; got " +
                                std::to_string(rate));
    return coeff_b(params) * (annuity_reciprocal(rate, params.years()) -
                              1.0 / params.years());
}

double invert_breakeven(const ProjectParams& params, double quantity) {
    check_quantity(quantity);
    const double floor = accounting_breakeven(params);
    if (quantity <= floor)
        throw inverse_domain_error(
            "no positive discount rate attains this quantity: " +
            std::to_string(quantity) + " is at or below the accounting "
            "break-even " + std::to_string(floor));

    double lo = 0.0;
    double hi = 1.0;
    while (financial_breakeven(params, hi) < quantity) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi))
            throw convergence_error("bracket expansion overflowed");
    }

    for (int iteration = 0; iteration < 200; ++iteration) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // bracket at machine resolution
        const double value = financial_breakeven(params, mid);
        if (value < quantity)
            lo = mid;
        else
            hi = mid;
    }

    const double root = 0.5 * (lo + hi);
    if (std::abs(financial_breakeven(params, root) - quantity) >
        1e-8 * quantity)
        throw convergence_error("bisection did not reach the requested "
                                "residual after 200 iterations");
    return root;
}

BreakevenCurve sweep(const ProjectParams& params,
                     std::span<const double> rate_grid) {
    for (size_t i = 0; i < rate_grid.size(); ++i) {
        check_rate_nonnegative(rate_grid[i]);
        if (i > 0 && !(rate_grid[i] > rate_grid[i - 1]))
            throw std::domain_error(
                "rate grid must be strictly increasing (entry " +
                std::to_string(i) + ")");
    }

    BreakevenCurve curve;
    curve.points.reserve(rate_grid.size());
    for (const double rate : rate_grid)
        curve.points.push_back({rate, financial_breakeven(params, rate)});
    std::tie(curve.asymptote_intercept, curve.asymptote_slope) =
        asymptote(params);
    return curve;
}

} // namespace breakeven
