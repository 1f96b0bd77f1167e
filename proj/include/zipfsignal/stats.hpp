#pragma once

namespace zipfsignal::stats {

// ln B(a, b).
double log_beta(double a, double b);

// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0,1].
// Continued-fraction evaluation (modified Lentz), absolute accuracy ~1e-14.
double regularized_incomplete_beta(double a, double b, double x);

// Student-t distribution with df degrees of freedom.
double student_t_cdf(double t, double df);

// Upper tail P(T >= t). More accurate than 1 - cdf for large t.
double student_t_sf(double t, double df);

}  // namespace zipfsignal::stats
