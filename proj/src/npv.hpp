#pragma once

#include "project.hpp"

namespace breakeven {

/// NPV(Q) = intercept + slope * Q at a fixed discount rate.
struct NpvLine {
    double intercept; ///< h(r) = -I + f(r)[t_e A - (1 - t_e) C_f]
    double slope;     ///< m(r) = f(r)(p - C_v)(1 - t_e), always > 0
    double rate;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Sign of the NPV together with the comparison that produced it.
struct NpvSign {
    Sign value;
    double npv;
    double quantity;
    double breakeven_quantity; ///< Q_f at the queried rate
};

struct NpvPartials {
    double wrt_quantity; ///< dNPV/dQ = m(r) > 0
    double wrt_rate;     ///< dNPV/dr = h'(r) + m'(r) Q
};

enum class Trend { decreasing = -1, constant = 0, increasing = 1 };

/// |NPV| at or below this counts as zero when classifying signs.
double zero_tolerance(const ProjectParams& params);

/// The NPV as a line in Q; accepts any rate > -1 (rate 0 goes through the
/// series path of the annuity kernel).
NpvLine npv_line(const ProjectParams& params, double rate);

double npv(const ProjectParams& params, double quantity, double rate);

/// Requires rate >= 0 so the break-even comparison is defined.
NpvSign classify(const ProjectParams& params, double quantity, double rate);

/// Exact partial derivatives of NPV(Q, r).  The rate component is
/// h'(r) + m'(r) Q = (p - C_v)(1 - t_e) f'(r) (Q - a); it is negative
/// exactly when Q > a.
NpvPartials npv_partials(const ProjectParams& params, double quantity,
                         double rate);

/// Direction of h(r): the sign of C_f(1 - t_e) - A t_e, with an exact-zero
/// band so the deliberately constant case (h = -I) is recognized.
Trend h_monotonicity(const ProjectParams& params);

} // namespace breakeven
