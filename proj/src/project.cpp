#include "project.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace breakeven {
namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

ProjectParams ProjectParams::validate(double initial_outlay, int years,
                                      double price, double variable_cost,
                                      double fixed_costs, double tax_rate) {
    std::vector<std::string> issues;

    if (!std::isfinite(initial_outlay) || !(initial_outlay > 0.0))
        issues.push_back("initial_outlay must be > 0 (got " +
                         num(initial_outlay) + ")");
    if (years < 2)
        issues.push_back("years must be >= 2 (got " + std::to_string(years) +
                         ")");
    if (!std::isfinite(variable_cost) || !(variable_cost > 0.0))
        issues.push_back("variable_cost must be > 0 (got " +
                         num(variable_cost) + ")");
    if (!std::isfinite(price) || !(price > variable_cost))
        issues.push_back("price must exceed variable_cost (price=" +
                         num(price) + ", variable_cost=" + num(variable_cost) +
                         ")");
    if (!std::isfinite(fixed_costs) || !(fixed_costs >= 0.0))
        issues.push_back("fixed_costs must be >= 0 (got " + num(fixed_costs) +
                         ")");
    if (!std::isfinite(tax_rate) || !(tax_rate >= 0.0) || !(tax_rate < 1.0))
        issues.push_back("tax_rate must be in [0, 1) (got " + num(tax_rate) +
                         ")");

    if (!issues.empty()) throw validation_error(std::move(issues));
    return ProjectParams(initial_outlay, years, price, variable_cost,
                         fixed_costs, tax_rate);
}

ProjectParams::ProjectParams(double initial_outlay, int years, double price,
                             double variable_cost, double fixed_costs,
                             double tax_rate)
    : initial_outlay_(initial_outlay),
      years_(years),
      price_(price),
      variable_cost_(variable_cost),
      fixed_costs_(fixed_costs),
      tax_rate_(tax_rate),
      amortization_(initial_outlay / years) {}

void check_quantity(double quantity) {
    if (!std::isfinite(quantity) || quantity < 0.0)
        throw std::domain_error("quantity must be finite and >= 0; got " +
                                num(quantity));
}

double net_cash_flow(const ProjectParams& params, double quantity) {
    check_quantity(quantity);
    const double taxed = (1.0 - params.tax_rate()) *
                         (params.contribution_margin() * quantity -
                          params.fixed_costs());
    return taxed + params.tax_rate() * params.amortization();
}

double ebt(const ProjectParams& params, double quantity) {
    check_quantity(quantity);
    return params.contribution_margin() * quantity - params.fixed_costs() -
           params.amortization();
}

double accounting_breakeven(const ProjectParams& params) {
    return (params.fixed_costs() + params.amortization()) /
           params.contribution_margin();
}

double coeff_a(const ProjectParams& params) {
    const double numerator =
        params.fixed_costs() -
        params.tax_rate() * (params.fixed_costs() + params.amortization());
    return numerator / params.after_tax_margin();
}

double coeff_b(const ProjectParams& params) {
    return params.initial_outlay() / params.after_tax_margin();
}

} // namespace breakeven
