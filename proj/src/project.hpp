#pragma once

namespace breakeven {

/// Validated bundle of project parameters.  Instances can only be built
/// through validate(), so downstream code may assume every invariant:
/// I > 0, n >= 2, p > C_v > 0, C_f >= 0, 0 <= t_e < 1.  The annual
/// amortization A = I/n is derived, never supplied.
class ProjectParams {
public:
    static ProjectParams validate(double initial_outlay, int years,
                                  double price, double variable_cost,
                                  double fixed_costs, double tax_rate);

    double initial_outlay() const noexcept { return initial_outlay_; }
    int years() const noexcept { return years_; }
    double price() const noexcept { return price_; }
    double variable_cost() const noexcept { return variable_cost_; }
    double fixed_costs() const noexcept { return fixed_costs_; }
    double tax_rate() const noexcept { return tax_rate_; }
    double amortization() const noexcept { return amortization_; }

    /// p - C_v, the per-unit surplus over variable cost.
    double contribution_margin() const noexcept {
        return price_ - variable_cost_;
    }

    /// (p - C_v)(1 - t_e), the after-tax contribution margin.
    double after_tax_margin() const noexcept {
        return contribution_margin() * (1.0 - tax_rate_);
    }

private:
    ProjectParams(double initial_outlay, int years, double price,
                  double variable_cost, double fixed_costs, double tax_rate);

    double initial_outlay_;
    int years_;
    double price_;
    double variable_cost_;
    double fixed_costs_;
    double tax_rate_;
    double amortization_;
};

/// Net cash flow of one year at quantity q:
/// (1 - t_e)[(p - C_v)q - C_f] + t_e A.  Linear in q.
double net_cash_flow(const ProjectParams& params, double quantity);

/// Earnings before taxes of one year: (p - C_v)q - C_f - A.
double ebt(const ProjectParams& params, double quantity);

/// Accounting break-even Q_c = (C_f + A)/(p - C_v), the quantity at which
/// EBT vanishes.
double accounting_breakeven(const ProjectParams& params);

/// Intercept a of the break-even curve's asymptote y = a + b r.
double coeff_a(const ProjectParams& params);

/// Slope b of the asymptote; positive for every valid project.
double coeff_b(const ProjectParams& params);

/// Throws std::domain_error unless quantity is finite and >= 0.
void check_quantity(double quantity);

} // namespace breakeven
