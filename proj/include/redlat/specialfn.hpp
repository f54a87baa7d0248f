#pragma once

// Special functions backing the closed-form latency/cost expressions:
// Gamma (with analytic continuation to negative non-integer arguments),
// Beta and incomplete Beta, and real-argument harmonic numbers.

namespace redlat {

// Gamma function. Throws std::domain_error at non-positive integers and
// std::overflow_error once the result exceeds double range (x > ~171.6).
double gamma_fn(double x);

// log |Gamma(x)| for x > 0. No overflow for large arguments.
double log_gamma(double x);

// log |Gamma(x)| together with the sign of Gamma(x); valid for any
// non-pole x, using reflection for x < 0.
double log_gamma_signed(double x, int& sign);

// Digamma psi(x) for x > 0.
double digamma(double x);

// Harmonic number H_n for real n >= 0, via H_n = psi(n+1) + gamma_e.
// Integer arguments take the exact partial-sum path.
double harmonic(double n);

// Generalized harmonic number of order two: sum_{i=1..n} 1/i^2.
double gen_harmonic2(long long n);

// Beta function Gamma(m)Gamma(n)/Gamma(m+n), continued to negative
// non-integer arguments. Throws std::domain_error when m, n, or m+n is a
// non-positive integer.
double beta_ext(double m, double n);

// Incomplete Beta B(q; m, n) = integral_0^q u^(m-1) (1-u)^(n-1) du,
// for q in [0,1] and m, n > 0.
double inc_beta(double q, double m, double n);

// Regularized incomplete Beta I_q(m, n) = B(q; m, n) / B(m, n), in [0,1].
double reg_inc_beta(double q, double m, double n);

}  // namespace redlat
