#include "breakeven/breakeven.h"

#include <cmath>
#include <new>
#include <stdexcept>
#include <string>

#include "annuity.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "npv.hpp"
#include "project.hpp"
#include "sensitivity.hpp"

struct be_project {
    breakeven::ProjectParams params;
};

namespace {

thread_local std::string g_last_error;

void clear_error() { g_last_error.clear(); }

be_status fail(be_status status, const char* what) {
    g_last_error = what;
    return status;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
be_status guarded(Fn&& body) {
    try {
        clear_error();
        body();
        return BE_OK;
    } catch (const breakeven::validation_error& e) {
        return fail(BE_ERR_INVALID_PARAMS, e.what());
    } catch (const breakeven::inverse_domain_error& e) {
        return fail(BE_ERR_OUT_OF_DOMAIN, e.what());
    } catch (const breakeven::convergence_error& e) {
        return fail(BE_ERR_NO_CONVERGENCE, e.what());
    } catch (const std::domain_error& e) {
        return fail(BE_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(BE_ERR_BAD_ARGUMENT, e.what());
    }
}

bool null_args() { return false; }

template <typename T, typename... Rest>
bool null_args(const T* first, Rest... rest) {
    return first == nullptr || null_args(rest...);
}

bool valid_param(be_param which) {
    return which == BE_PARAM_PRICE || which == BE_PARAM_VARIABLE_COST ||
           which == BE_PARAM_FIXED_COSTS;
}

} // namespace

extern "C" {

const char* be_version(void) { return "1.0.0"; }

const char* be_status_message(be_status status) {
    switch (status) {
        case BE_OK: return "ok";
        case BE_ERR_INVALID_PARAMS: return "invalid project parameters";
        case BE_ERR_DOMAIN: return "argument outside numeric domain";
        case BE_ERR_OUT_OF_DOMAIN: return "inverse problem out of domain";
        case BE_ERR_NO_CONVERGENCE: return "iteration limit exceeded";
        case BE_ERR_BAD_ARGUMENT: return "bad argument";
    }
    return "unknown status";
}

const char* be_last_error_message(void) { return g_last_error.c_str(); }

be_status be_project_create(const be_project_params* params,
                            be_project** out) {
    if (null_args(params, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    *out = nullptr;
    return guarded([&] {
        auto validated = breakeven::ProjectParams::validate(
            params->initial_outlay, params->years, params->price,
            params->variable_cost, params->fixed_costs, params->tax_rate);
        *out = new be_project{validated};
    });
}

void be_project_destroy(be_project* project) { delete project; }

be_status be_project_get_params(const be_project* project,
                                be_project_params* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    const auto& p = project->params;
    *out = {p.initial_outlay(), p.years(),       p.price(),
            p.variable_cost(),  p.fixed_costs(), p.tax_rate()};
    clear_error();
    return BE_OK;
}

be_status be_project_perturb(const be_project* project, be_param which,
                             double delta, be_project** out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    if (!valid_param(which))
        return fail(BE_ERR_BAD_ARGUMENT, "unknown be_param value");
    *out = nullptr;
    return guarded([&] {
        auto scaled = breakeven::perturbed(
            project->params, static_cast<breakeven::PerturbParam>(which),
            delta);
        *out = new be_project{scaled};
    });
}

#define BE_PROJECT_SCALAR(c_name, expr)                                      \
    be_status c_name(const be_project* project, double* out) {               \
        if (null_args(project, out))                                         \
            return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");       \
        return guarded([&] { *out = (expr); });                              \
    }

BE_PROJECT_SCALAR(be_amortization, project->params.amortization())
BE_PROJECT_SCALAR(be_accounting_breakeven,
                  breakeven::accounting_breakeven(project->params))
BE_PROJECT_SCALAR(be_coeff_a, breakeven::coeff_a(project->params))
BE_PROJECT_SCALAR(be_coeff_b, breakeven::coeff_b(project->params))

#undef BE_PROJECT_SCALAR

be_status be_net_cash_flow(const be_project* project, double quantity,
                           double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded(
        [&] { *out = breakeven::net_cash_flow(project->params, quantity); });
}

be_status be_ebt(const be_project* project, double quantity, double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = breakeven::ebt(project->params, quantity); });
}

#define BE_KERNEL(c_name, cxx_name)                                          \
    be_status c_name(double rate, int years, double* out) {                  \
        if (null_args(out))                                                  \
            return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");       \
        return guarded([&] { *out = breakeven::cxx_name(rate, years); });    \
    }

BE_KERNEL(be_annuity_factor, annuity_factor)
BE_KERNEL(be_annuity_reciprocal, annuity_reciprocal)
BE_KERNEL(be_annuity_derivative, annuity_derivative)
BE_KERNEL(be_annuity_second_derivative, annuity_second_derivative)
BE_KERNEL(be_poly_g, poly_g)
BE_KERNEL(be_poly_h, poly_h)

#undef BE_KERNEL

be_status be_npv_line(const be_project* project, double rate,
                      double* intercept, double* slope) {
    if (null_args(project, intercept, slope))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        const auto line = breakeven::npv_line(project->params, rate);
        *intercept = line.intercept;
        *slope = line.slope;
    });
}

be_status be_npv(const be_project* project, double quantity, double rate,
                 double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded(
        [&] { *out = breakeven::npv(project->params, quantity, rate); });
}

be_status be_npv_sign(const be_project* project, double quantity, double rate,
                      be_sign* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        const auto sign =
            breakeven::classify(project->params, quantity, rate);
        *out = static_cast<be_sign>(sign.value);
    });
}

be_status be_npv_partials(const be_project* project, double quantity,
                          double rate, double* wrt_quantity,
                          double* wrt_rate) {
    if (null_args(project, wrt_quantity, wrt_rate))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        const auto partials =
            breakeven::npv_partials(project->params, quantity, rate);
        *wrt_quantity = partials.wrt_quantity;
        *wrt_rate = partials.wrt_rate;
    });
}

be_status be_h_monotonicity(const be_project* project, be_trend* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = static_cast<be_trend>(
            breakeven::h_monotonicity(project->params));
    });
}

be_status be_financial_breakeven(const be_project* project, double rate,
                                 double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded(
        [&] { *out = breakeven::financial_breakeven(project->params, rate); });
}

be_status be_breakeven_derivative(const be_project* project, double rate,
                                  double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = breakeven::breakeven_derivative(project->params, rate);
    });
}

be_status be_gap_to_accounting(const be_project* project, double rate,
                               double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded(
        [&] { *out = breakeven::gap_to_accounting(project->params, rate); });
}

be_status be_invert_breakeven(const be_project* project, double quantity,
                              double* rate_out) {
    if (null_args(project, rate_out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *rate_out = breakeven::invert_breakeven(project->params, quantity);
    });
}

be_status be_sweep(const be_project* project, const double* rate_grid,
                   size_t count, double* out) {
    if (project == nullptr || (count > 0 && (rate_grid == nullptr ||
                                             out == nullptr)))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        const auto curve = breakeven::sweep(
            project->params, std::span<const double>(rate_grid, count));
        for (size_t i = 0; i < count; ++i) out[i] = curve.points[i].quantity;
    });
}

be_status be_growth_discount_factor(double rate, double growth, int years,
                                    double* out) {
    if (null_args(out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = breakeven::growth_discount_factor(rate, growth, years);
    });
}

be_status be_npv_growth(const be_project* project, double quantity,
                        double rate, double growth, double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = breakeven::npv_growth(project->params, quantity, rate, growth);
    });
}

be_status be_financial_breakeven_growth(const be_project* project, double rate,
                                        double growth, double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = breakeven::financial_breakeven_growth(project->params, rate,
                                                     growth);
    });
}

be_status be_growth_zero_limit(const be_project* project, double growth,
                               double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded(
        [&] { *out = breakeven::growth_zero_limit(project->params, growth); });
}

be_status be_asymptote_probe(const be_project* project, double growth,
                             double rate_lo, double rate_hi, size_t samples,
                             double* slope, double* intercept) {
    if (null_args(project, slope, intercept))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    return guarded([&] {
        const auto probe = breakeven::asymptote_probe(
            project->params, growth, rate_lo, rate_hi,
            static_cast<int>(samples));
        *slope = probe.slope;
        *intercept = probe.intercept;
    });
}

be_status be_elasticity(const be_project* project, be_param which, double rate,
                        double* out) {
    if (null_args(project, out))
        return fail(BE_ERR_BAD_ARGUMENT, "null pointer argument");
    if (!valid_param(which))
        return fail(BE_ERR_BAD_ARGUMENT, "unknown be_param value");
    return guarded([&] {
        *out = breakeven::elasticity(
            project->params, static_cast<breakeven::PerturbParam>(which),
            rate);
    });
}

} // extern "C"
