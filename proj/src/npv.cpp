#include "npv.hpp"

#include <algorithm>
#include <cmath>

#include "annuity.hpp"
#include "curve.hpp"

namespace breakeven {

double zero_tolerance(const ProjectParams& params) {
    return 1e-6 * std::max(1.0, std::abs(params.initial_outlay()));
}

NpvLine npv_line(const ProjectParams& params, double rate) {
    const double factor = annuity_factor(rate, params.years());
    const double shield = params.tax_rate() * params.amortization() -
                          (1.0 - params.tax_rate()) * params.fixed_costs();
    return {-params.initial_outlay() + factor * shield,
            params.after_tax_margin() * factor, rate};
}

double npv(const ProjectParams& params, double quantity, double rate) {
    check_quantity(quantity);
    const NpvLine line = npv_line(params, rate);
    return line.intercept + line.slope * quantity;
}

NpvSign classify(const ProjectParams& params, double quantity, double rate) {
    const double breakeven = financial_breakeven(params, rate);
    const double value = npv(params, quantity, rate);
    Sign sign = Sign::zero;
    if (std::abs(value) > zero_tolerance(params))
        sign = value > 0.0 ? Sign::positive : Sign::negative;
    return {sign, value, quantity, breakeven};
}

NpvPartials npv_partials(const ProjectParams& params, double quantity,
                         double rate) {
    check_quantity(quantity);
    const double factor = annuity_factor(rate, params.years());
    const double slope_rate = annuity_derivative(rate, params.years());
    const double shield = params.tax_rate() * params.amortization() -
                          (1.0 - params.tax_rate()) * params.fixed_costs();
    return {params.after_tax_margin() * factor,
            slope_rate * (shield + params.after_tax_margin() * quantity)};
}

Trend h_monotonicity(const ProjectParams& params) {
    const double discriminant =
        params.fixed_costs() * (1.0 - params.tax_rate()) -
        params.amortization() * params.tax_rate();
    const double tolerance =
        1e-12 * (params.fixed_costs() + params.amortization());
    if (std::abs(discriminant) <= tolerance) return Trend::constant;
    return discriminant > 0.0 ? Trend::increasing : Trend::decreasing;
}

} // namespace breakeven
