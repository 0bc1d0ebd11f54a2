#include "sensitivity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "curve.hpp"
#include "errors.hpp"

namespace breakeven {

const char* perturb_param_name(PerturbParam which) {
    switch (which) {
        case PerturbParam::price: return "price";
        case PerturbParam::variable_cost: return "variable_cost";
        case PerturbParam::fixed_costs: return "fixed_costs";
    }
    return "?";
}

ProjectParams perturbed(const ProjectParams& params, PerturbParam which,
                        double delta) {
    double price = params.price();
    double variable_cost = params.variable_cost();
    double fixed_costs = params.fixed_costs();
    switch (which) {
        case PerturbParam::price: price *= 1.0 + delta; break;
        case PerturbParam::variable_cost: variable_cost *= 1.0 + delta; break;
        case PerturbParam::fixed_costs: fixed_costs *= 1.0 + delta; break;
    }
    return ProjectParams::validate(params.initial_outlay(), params.years(),
                                   price, variable_cost, fixed_costs,
                                   params.tax_rate());
}

SensitivityReport perturb_and_sweep(const ProjectParams& params,
                                    PerturbParam which,
                                    std::span<const double> deltas,
                                    std::span<const double> rate_grid) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<double> base(rate_grid.size());
    for (size_t i = 0; i < rate_grid.size(); ++i)
        base[i] = financial_breakeven(params, rate_grid[i]);

    SensitivityReport report{which, {}};
    report.cells.reserve(deltas.size() * rate_grid.size());
    for (const double delta : deltas) {
        bool feasible = true;
        ProjectParams scaled = params;
        try {
            scaled = perturbed(params, which, delta);
        } catch (const validation_error&) {
            feasible = false;
        }
        for (size_t i = 0; i < rate_grid.size(); ++i) {
            SensitivityCell cell{delta, rate_grid[i], base[i], nan, nan,
                                 feasible};
            if (feasible) {
                cell.perturbed = financial_breakeven(scaled, rate_grid[i]);
                cell.relative_change =
                    (cell.perturbed - cell.base) / cell.base;
            }
            report.cells.push_back(cell);
        }
    }
    return report;
}

double elasticity(const ProjectParams& params, PerturbParam which,
                  double rate) {
    if (!std::isfinite(rate) || !(rate > 0.0))
        throw std::domain_error("discount rate must be > 0; got " +
                                std::to_string(rate));
    constexpr double step = 1e-5;
    const double up = financial_breakeven(perturbed(params, which, step), rate);
    const double down =
        financial_breakeven(perturbed(params, which, -step), rate);
    const double center = financial_breakeven(params, rate);
    return (up - down) / (2.0 * step * center);
}

std::vector<std::pair<double, double>> rate_scenarios(
    const ProjectParams& params, double base_rate,
    std::span<const double> deltas) {
    if (!std::isfinite(base_rate) || !(base_rate > 0.0))
        throw std::domain_error("base rate must be > 0; got " +
                                std::to_string(base_rate));

    std::vector<std::pair<double, double>> rows;
    rows.reserve(deltas.size() + 1);
    rows.emplace_back(base_rate, financial_breakeven(params, base_rate));
    for (const double delta : deltas) {
        const double rate = base_rate * (1.0 + delta);
        if (!(rate > 0.0))
            throw std::domain_error("scaled rate must stay > 0; delta " +
                                    std::to_string(delta) + " gives " +
                                    std::to_string(rate));
        rows.emplace_back(rate, financial_breakeven(params, rate));
    }
    return rows;
}

} // namespace breakeven
