#include "annuity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace breakeven {
namespace {

void check_args(double rate, int years) {
    if (!(years >= 2))
        throw std::domain_error("years must be >= 2; got " +
                                std::to_string(years));
    if (!(rate > -1.0) || !std::isfinite(rate))
        throw std::domain_error("rate must be a finite value > -1; got " +
                                std::to_string(rate));
}

// Double-double helpers.  (1+x)^-n enters f(x) through the difference
// 1 - (1+x)^-n, which for small n*x cancels down to O(n*x); a plain
// power would leave a relative error of order eps/x there.  Carrying the
// base and the squaring chain in two doubles keeps the difference accurate
// to a few ulp across the series switch.  All operations are plain IEEE
// mul/add/fma, so results are identical across platforms.
struct dd {
    double hi, lo;
};

dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

dd fast_renorm(double hi, double lo) {
    const double s = hi + lo;
    return {s, lo - (s - hi)};
}

dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

dd dd_add(const dd& a, const dd& b) {
    const dd s = two_sum(a.hi, b.hi);
    return fast_renorm(s.hi, s.lo + a.lo + b.lo);
}

dd dd_mul(const dd& a, const dd& b) {
    const dd p = two_prod(a.hi, b.hi);
    return fast_renorm(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

dd dd_recip(const dd& a) {
    const double y = 1.0 / a.hi;
    const dd ay = dd_mul(a, {y, 0.0});
    const dd residual = dd_add({1.0, 0.0}, {-ay.hi, -ay.lo});
    const dd correction = dd_mul({y, 0.0}, residual);
    return dd_add({y, 0.0}, correction);
}

// base^n by squaring, n >= 0.
dd dd_pow_int(dd base, int n) {
    dd acc{1.0, 0.0};
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1u) {
        if (e & 1u) acc = dd_mul(acc, base);
        base = dd_mul(base, base);
    }
    return acc;
}

// Plain exponentiation by squaring, n >= 0.
double pow_int(double base, int n) {
    double acc = 1.0;
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1u) {
        if (e & 1u) acc *= base;
        base *= base;
    }
    return acc;
}

// 1 - (1+x)^-n to full double accuracy.
double one_minus_discount(double x, int n) {
    const dd q = dd_pow_int(dd_recip(two_sum(1.0, x)), n);
    return (1.0 - q.hi) - q.lo;
}

// Taylor coefficients of f at 0: f(x) = n - s1 x + s2 x^2 - s3 x^3 + s4 x^4
// with s_k = n(n+1)...(n+k)/(k+1)!.  Two terms beyond the curvature are
// kept so the series and the closed form agree through the switch point
// for horizons up to several decades.
struct series_coeffs {
    double s1, s2, s3, s4;
};

series_coeffs coeffs(int years) {
    const double n = years;
    const double s1 = n * (n + 1) / 2.0;
    const double s2 = s1 * (n + 2) / 3.0;
    const double s3 = s2 * (n + 3) / 4.0;
    const double s4 = s3 * (n + 4) / 5.0;
    return {s1, s2, s3, s4};
}

} // namespace

double annuity_factor(double rate, int years) {
    check_args(rate, years);
    if (std::abs(rate) < kAnnuitySeriesSwitch) {
        const auto [s1, s2, s3, s4] = coeffs(years);
        return (((s4 * rate - s3) * rate + s2) * rate - s1) * rate + years;
    }
    return one_minus_discount(rate, years) / rate;
}

double annuity_reciprocal(double rate, int years) {
    return 1.0 / annuity_factor(rate, years);
}

double annuity_derivative(double rate, int years) {
    check_args(rate, years);
    if (std::abs(rate) < kAnnuitySeriesSwitch) {
        const auto [s1, s2, s3, s4] = coeffs(years);
        return ((4.0 * s4 * rate - 3.0 * s3) * rate + 2.0 * s2) * rate - s1;
    }
    return -poly_g(rate, years) /
           (rate * rate * pow_int(1.0 + rate, years + 1));
}

double annuity_second_derivative(double rate, int years) {
    check_args(rate, years);
    if (std::abs(rate) < kAnnuitySeriesSwitch) {
        const auto [s1, s2, s3, s4] = coeffs(years);
        (void)s1;
        return (12.0 * s4 * rate - 6.0 * s3) * rate + 2.0 * s2;
    }
    return poly_h(rate, years) /
           (rate * rate * rate * pow_int(1.0 + rate, years + 2));
}

double poly_g(double rate, int years) {
    check_args(rate, years);
    return pow_int(1.0 + rate, years + 1) - 1.0 - (years + 1) * rate;
}

double poly_h(double rate, int years) {
    check_args(rate, years);
    const double n = years;
    return 2.0 * pow_int(1.0 + rate, years + 2) - 2.0 - 2.0 * (n + 2) * rate -
           (n + 1) * (n + 2) * rate * rate;
}

double pow1p_minus_one(double g, int n) {
    const dd p = dd_pow_int(two_sum(1.0, g), n);
    return (p.hi - 1.0) + p.lo;
}

} // namespace breakeven
