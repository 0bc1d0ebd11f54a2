/* breakeven.h - public C API of the break-even analysis library.
 *
 * The library models a single-product investment project (initial outlay
 * amortized straight-line over n years, constant price and costs, flat
 * annual discount rate) and computes:
 *
 *   - the NPV of the project as a straight line in the yearly quantity Q,
 *   - the financial break-even quantity Q_f(r) and its behaviour in r
 *     (derivative, asymptote, gap to the accounting break-even, inverse),
 *   - the growth extension Q_f(r, g) for output growing at rate g,
 *   - parameter sensitivities of Q_f.
 *
 * All handles are opaque; every function reports a be_status.  On failure a
 * human-readable detail message is available from be_last_error_message()
 * (thread-local, valid until the next failing call on the same thread).
 */
#ifndef BREAKEVEN_H
#define BREAKEVEN_H

#include <stddef.h>

#if defined(_WIN32)
#  define BE_API __declspec(dllexport)
#else
#  define BE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct be_project be_project; /* opaque validated project */

typedef enum be_status {
    BE_OK = 0,
    BE_ERR_INVALID_PARAMS = 1, /* parameter validation failed */
    BE_ERR_DOMAIN = 2,         /* numeric argument outside its domain */
    BE_ERR_OUT_OF_DOMAIN = 3,  /* inverse problem: quantity at or below Q_c */
    BE_ERR_NO_CONVERGENCE = 4, /* iteration limit hit (should not happen) */
    BE_ERR_BAD_ARGUMENT = 5    /* null pointer / malformed array argument */
} be_status;

typedef enum be_sign {
    BE_SIGN_NEGATIVE = -1,
    BE_SIGN_ZERO = 0,
    BE_SIGN_POSITIVE = 1
} be_sign;

typedef enum be_trend {
    BE_TREND_DECREASING = -1,
    BE_TREND_CONSTANT = 0,
    BE_TREND_INCREASING = 1
} be_trend;

typedef enum be_param {
    BE_PARAM_PRICE = 0,
    BE_PARAM_VARIABLE_COST = 1,
    BE_PARAM_FIXED_COSTS = 2
} be_param;

typedef struct be_project_params {
    double initial_outlay; /* I > 0, currency */
    int years;             /* n >= 2 */
    double price;          /* p per unit, p > variable_cost */
    double variable_cost;  /* C_v per unit, > 0 */
    double fixed_costs;    /* C_f per year, >= 0 */
    double tax_rate;       /* t_e in [0, 1) */
} be_project_params;

BE_API const char* be_version(void);

/* Short static description of a status code. */
BE_API const char* be_status_message(be_status status);

/* Detail of the most recent failure on the calling thread ("" when none). */
BE_API const char* be_last_error_message(void);

/* ---- project lifetime ------------------------------------------------- */

/* Validates the parameters and builds a project handle.  On
 * BE_ERR_INVALID_PARAMS the message lists every violated constraint. */
BE_API be_status be_project_create(const be_project_params* params,
                                   be_project** out);
BE_API void be_project_destroy(be_project* project);

BE_API be_status be_project_get_params(const be_project* project,
                                       be_project_params* out);

/* Copy of the project with one parameter scaled by (1 + delta); fails with
 * BE_ERR_INVALID_PARAMS when the scaled parameters are infeasible. */
BE_API be_status be_project_perturb(const be_project* project, be_param which,
                                    double delta, be_project** out);

/* ---- per-year accounting ---------------------------------------------- */

BE_API be_status be_amortization(const be_project* project, double* out);
BE_API be_status be_net_cash_flow(const be_project* project, double quantity,
                                  double* out);
BE_API be_status be_ebt(const be_project* project, double quantity,
                        double* out);
BE_API be_status be_accounting_breakeven(const be_project* project,
                                         double* out);

/* Asymptote coefficients of the break-even curve: Q_f(r) -> a + b r. */
BE_API be_status be_coeff_a(const be_project* project, double* out);
BE_API be_status be_coeff_b(const be_project* project, double* out);

/* ---- annuity kernel (stateless; years >= 2, rate > -1) ----------------- */

BE_API be_status be_annuity_factor(double rate, int years, double* out);
BE_API be_status be_annuity_reciprocal(double rate, int years, double* out);
BE_API be_status be_annuity_derivative(double rate, int years, double* out);
BE_API be_status be_annuity_second_derivative(double rate, int years,
                                              double* out);
BE_API be_status be_poly_g(double rate, int years, double* out);
BE_API be_status be_poly_h(double rate, int years, double* out);

/* ---- NPV --------------------------------------------------------------- */

/* NPV(Q) = h + m Q at the given discount rate. */
BE_API be_status be_npv_line(const be_project* project, double rate,
                             double* intercept, double* slope);
BE_API be_status be_npv(const be_project* project, double quantity,
                        double rate, double* out);
BE_API be_status be_npv_sign(const be_project* project, double quantity,
                             double rate, be_sign* out);
BE_API be_status be_npv_partials(const be_project* project, double quantity,
                                 double rate, double* wrt_quantity,
                                 double* wrt_rate);
BE_API be_status be_h_monotonicity(const be_project* project, be_trend* out);

/* ---- break-even curve --------------------------------------------------- */

BE_API be_status be_financial_breakeven(const be_project* project, double rate,
                                        double* out);
BE_API be_status be_breakeven_derivative(const be_project* project,
                                         double rate, double* out);
BE_API be_status be_gap_to_accounting(const be_project* project, double rate,
                                      double* out);

/* Unique rate r with Q_f(r) = quantity; requires quantity > Q_c. */
BE_API be_status be_invert_breakeven(const be_project* project,
                                     double quantity, double* rate_out);

/* Q_f at every grid rate; grid must be non-negative and strictly
 * increasing; out must hold count values. */
BE_API be_status be_sweep(const be_project* project, const double* rate_grid,
                          size_t count, double* out);

/* ---- growth extension --------------------------------------------------- */

BE_API be_status be_growth_discount_factor(double rate, double growth,
                                           int years, double* out);
BE_API be_status be_npv_growth(const be_project* project, double quantity,
                               double rate, double growth, double* out);
BE_API be_status be_financial_breakeven_growth(const be_project* project,
                                               double rate, double growth,
                                               double* out);

/* r -> 0 limit of Q_f(r, growth); requires growth > 0. */
BE_API be_status be_growth_zero_limit(const be_project* project, double growth,
                                      double* out);

/* Least-squares line through Q_f(r, growth) sampled on [rate_lo, rate_hi]
 * (rate_hi > rate_lo >= 10, samples >= 2). */
BE_API be_status be_asymptote_probe(const be_project* project, double growth,
                                    double rate_lo, double rate_hi,
                                    size_t samples, double* slope,
                                    double* intercept);

/* ---- sensitivity -------------------------------------------------------- */

/* Central-difference elasticity (dQ_f/dtheta)(theta/Q_f) at the given rate. */
BE_API be_status be_elasticity(const be_project* project, be_param which,
                               double rate, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BREAKEVEN_H */
