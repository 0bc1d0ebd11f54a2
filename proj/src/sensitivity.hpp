#pragma once

#include <span>
#include <utility>
#include <vector>

#include "project.hpp"

namespace breakeven {

enum class PerturbParam { price, variable_cost, fixed_costs };

const char* perturb_param_name(PerturbParam which);

/// One perturbation cell: Q_f before and after scaling a parameter by
/// (1 + delta) at a fixed rate.  Infeasible cells (the scaled parameters
/// violate an invariant, e.g. p <= C_v) keep feasible = false and NaN
/// results instead of failing the sweep.
struct SensitivityCell {
    double delta;
    double rate;
    double base;
    double perturbed;
    double relative_change; ///< (perturbed - base)/base
    bool feasible;
};

struct SensitivityReport {
    PerturbParam parameter;
    std::vector<SensitivityCell> cells; ///< delta-major, grid order within
};

/// Copy of the project with one parameter scaled by (1 + delta); throws
/// validation_error when the result is infeasible.
ProjectParams perturbed(const ProjectParams& params, PerturbParam which,
                        double delta);

SensitivityReport perturb_and_sweep(const ProjectParams& params,
                                    PerturbParam which,
                                    std::span<const double> deltas,
                                    std::span<const double> rate_grid);

/// Central-difference elasticity (dQ_f/dtheta)(theta/Q_f) with relative
/// step 1e-5; requires rate > 0.
double elasticity(const ProjectParams& params, PerturbParam which,
                  double rate);

/// Q_f at the base rate and at each base_rate (1 + delta); the base pair
/// comes first.  Every scaled rate must stay positive.
std::vector<std::pair<double, double>> rate_scenarios(
    const ProjectParams& params, double base_rate,
    std::span<const double> deltas);

} // namespace breakeven
