#pragma once

#include "project.hpp"

namespace breakeven {

/// Discount factor of a unit flow growing at rate g, first year ungrown:
/// Phi(r, g) = f((r - g)/(1 + g)) / (1 + g).  The r = g case lands on
/// f(0) = n through the series path, so no separate branch exists.
double growth_discount_factor(double rate, double growth, int years);

/// NPV with output growing at rate g: h(r) + (p - C_v)(1 - t_e) Phi(r, g) Q.
/// Fixed costs and amortization do not grow.  At g = 0 this reproduces the
/// flat-output NPV bit for bit.
double npv_growth(const ProjectParams& params, double quantity, double rate,
                  double growth);

/// Q_f(r, g) = (b + a f(r)) (1 + g) F((r - g)/(1 + g)); requires rate >= 0
/// and growth > -1.
double financial_breakeven_growth(const ProjectParams& params, double rate,
                                  double growth);

/// r -> 0 limit of Q_f(r, g): n g / ((1+g)^n - 1) Q_c, strictly below Q_c.
/// Requires growth > 0 (at g = 0 the limit is Q_c itself).
double growth_zero_limit(const ProjectParams& params, double growth);

struct AsymptoteProbe {
    double slope;
    double intercept;
};

/// Least-squares line through Q_f(r, g) sampled uniformly on
/// [rate_lo, rate_hi] with rate_hi > rate_lo >= 10 and samples >= 2.
/// The slope lands on b for every growth rate; the empirical intercept is
/// reported as fitted (it tracks a - b g rather than a).
AsymptoteProbe asymptote_probe(const ProjectParams& params, double growth,
                               double rate_lo, double rate_hi, int samples);

} // namespace breakeven
