#include "growth.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "annuity.hpp"
#include "curve.hpp"
#include "npv.hpp"

namespace breakeven {
namespace {

void check_growth(double growth) {
    if (!std::isfinite(growth) || !(growth > -1.0))
        throw std::domain_error("growth rate must be finite and > -1; got " +
                                std::to_string(growth));
}

} // namespace

double growth_discount_factor(double rate, double growth, int years) {
    check_growth(growth);
    // (rate - growth)/(1 + growth) > -1 holds exactly when rate > -1, which
    // annuity_factor enforces.
    return annuity_factor((rate - growth) / (1.0 + growth), years) /
           (1.0 + growth);
}

double npv_growth(const ProjectParams& params, double quantity, double rate,
                  double growth) {
    check_quantity(quantity);
    const double factor =
        growth_discount_factor(rate, growth, params.years());
    const NpvLine line = npv_line(params, rate);
    return line.intercept + params.after_tax_margin() * factor * quantity;
}

double financial_breakeven_growth(const ProjectParams& params, double rate,
                                  double growth) {
    if (!std::isfinite(rate) || rate < 0.0)
        throw std::domain_error(
            "discount rate must be finite and >= 0; got " +
            std::to_string(rate));
    check_growth(growth);
    const double factor = annuity_factor(rate, params.years());
    const double transformed =
        annuity_reciprocal((rate - growth) / (1.0 + growth), params.years());
    return (coeff_b(params) + coeff_a(params) * factor) * (1.0 + growth) *
           transformed;
}

double growth_zero_limit(const ProjectParams& params, double growth) {
    if (!std::isfinite(growth) || !(growth > 0.0))
        throw std::domain_error("growth rate must be > 0; got " +
                                std::to_string(growth));
    // n g / ((1+g)^n - 1) = n / Phi(0, g); the Phi form inherits the
    // kernel's series accuracy for small g.
    return params.years() * accounting_breakeven(params) /
           growth_discount_factor(0.0, growth, params.years());
}

AsymptoteProbe asymptote_probe(const ProjectParams& params, double growth,
                               double rate_lo, double rate_hi, int samples) {
    check_growth(growth);
    if (!(rate_lo >= 10.0) || !(rate_hi > rate_lo))
        throw std::domain_error(
            "probe range must satisfy rate_hi > rate_lo >= 10");
    if (samples < 2)
        throw std::domain_error(
            "probe needs at least 2 samples; got " + std::to_string(samples));

    std::vector<double> rates(samples);
    std::vector<double> quantities(samples);
    const double step = (rate_hi - rate_lo) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        rates[i] = rate_lo + step * i;
        quantities[i] = financial_breakeven_growth(params, rates[i], growth);
    }

    double rate_mean = 0.0, quantity_mean = 0.0;
    for (int i = 0; i < samples; ++i) {
        rate_mean += rates[i];
        quantity_mean += quantities[i];
    }
    rate_mean /= samples;
    quantity_mean /= samples;

    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double dr = rates[i] - rate_mean;
        sxx += dr * dr;
        sxy += dr * (quantities[i] - quantity_mean);
    }
    const double slope = sxy / sxx;
    return {slope, quantity_mean - slope * rate_mean};
}

} // namespace breakeven
