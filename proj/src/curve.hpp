#pragma once

#include <span>
#include <utility>
#include <vector>

#include "project.hpp"

namespace breakeven {

/// The break-even quantity sampled over a rate grid, together with the
/// asymptote y = a + b r the curve approaches as r grows.
struct BreakevenCurve {
    struct Point {
        double rate;
        double quantity;
    };
    std::vector<Point> points; ///< ordered as the input grid
    double asymptote_intercept;
    double asymptote_slope;
};

/// Q_f(r) = a + b F(r): the quantity at which NPV(Q, r) = 0.  Requires
/// rate >= 0; rate 0 yields the accounting break-even Q_c.
double financial_breakeven(const ProjectParams& params, double rate);

/// dQ_f/dr = b F'(r) > 0; at rate 0 equals b(1 + 1/n)/2.
double breakeven_derivative(const ProjectParams& params, double rate);

/// (a, b) of the asymptote y = a + b r.
std::pair<double, double> asymptote(const ProjectParams& params);

/// Q_f(r) - Q_c = b (F(r) - 1/n), strictly positive; requires rate > 0.
double gap_to_accounting(const ProjectParams& params, double rate);

/// The unique rate r > 0 with Q_f(r) = quantity.  Requires quantity > Q_c;
/// found by doubling the bracket from 1 and bisecting (Q_f is strictly
/// increasing, so the root is unique).
double invert_breakeven(const ProjectParams& params, double quantity);

/// Q_f at every grid rate.  The grid must be finite, non-negative and
/// strictly increasing; an empty grid yields an empty curve with valid
/// asymptote coefficients.
BreakevenCurve sweep(const ProjectParams& params,
                     std::span<const double> rate_grid);

} // namespace breakeven
