#pragma once

namespace breakeven {

/// |rate| below this threshold is evaluated through the Taylor series path;
/// the closed form loses accuracy to cancellation as rate -> 0.
inline constexpr double kAnnuitySeriesSwitch = 1e-4;

/// Present value of `years` unit payments at per-year rate: f(x) =
/// (1 - (1+x)^-n) / x, extended by the same formula to the whole x > -1
/// range (f(0) = n by the series).  Throws std::domain_error when x <= -1
/// or years < 2.
double annuity_factor(double rate, int years);

/// F(x) = 1 / f(x); strictly increasing, asymptotic to y = x.
double annuity_reciprocal(double rate, int years);

/// f'(x); negative on the whole domain.
double annuity_derivative(double rate, int years);

/// f''(x); positive on the whole domain.
double annuity_second_derivative(double rate, int years);

/// G(x) = (1+x)^(n+1) - 1 - (n+1)x; the numerator polynomial of -f'.
double poly_g(double rate, int years);

/// H(x) = 2(1+x)^(n+2) - 2 - 2(n+2)x - (n+1)(n+2)x^2; numerator of f''.
double poly_h(double rate, int years);

/// (1+g)^n - 1 evaluated without cancellation for small g.
double pow1p_minus_one(double g, int n);

} // namespace breakeven
