#pragma once

namespace domint::specfun {

// log Gamma(a), a > 0.
double ln_gamma(double a);

// Gamma(a) for any non-pole a (reflection formula for negative non-integers).
double gamma_fn(double a);

// Regularized incomplete gamma functions P(a,x), Q(a,x); a > 0, x >= 0.
double reg_lower_gamma(double a, double x);
double reg_upper_gamma(double a, double x);

// Lower incomplete gamma(a,x). For a > 0 this is the usual integral.
// For negative non-integer a it is the analytic continuation
//   gamma(a,x) = x^a e^{-x} sum_{k>=0} x^k / (a (a+1) ... (a+k)),
// the only definition under which the residual-interference Laplace
// exponent stays finite.
double lower_inc_gamma(double a, double x);

// Independent evaluation route for the continuation: the Kummer series
// summed directly. Same contract as lower_inc_gamma for a < 0; used to
// cross-check the recurrence-based route.
double lower_inc_gamma_kummer(double a, double x);

// Upper incomplete Gamma(a,x), a > 0, x >= 0.
double upper_inc_gamma(double a, double x);

// gamma(a,x) - x^a / a, i.e. the continuation with its leading power
// stripped. Equals int_0^x (e^{-t} - 1) t^{a-1} dt for -1 < a < 0.
// Evaluated to full relative precision; the naive difference of the two
// terms cancels catastrophically for small x.
double gamma_tilde(double a, double x);

// Gamma(n+s) / Gamma(n), n >= 1 integer, n + s > 0.
double pochhammer_ratio(int n, double s);

} // namespace domint::specfun
