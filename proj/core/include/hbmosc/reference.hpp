#ifndef HBMOSC_REFERENCE_HPP
#define HBMOSC_REFERENCE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hbmosc {

// Ground-truth periods for x x'' + 1 = 0 and its regularization
// x' = y, y' = -x / (x^2 + k^2). All computations in 80-bit long double.

enum class PeriodMethod { ClosedForm, Quadrature, Ode };

struct PeriodResult {
    long double value = 0.0L;
    PeriodMethod method = PeriodMethod::ClosedForm;
    long double estimated_error = 0.0L;  // absolute
    long double amplitude = 0.0L;
    std::optional<long double> k;
};

struct PhasePoint {
    long double t = 0.0L, x = 0.0L, y = 0.0L;
};

// Self-contained error function: positive-term Taylor series for small
// arguments, Lentz continued fraction for the complement beyond.
long double erf_ld(long double z);
long double erfc_ld(long double z);
// Newton on erf with a log seed and a bisection guard. |u| >= 1 is a domain
// error.
long double erf_inv_ld(long double u);

// 2 sqrt(2 pi) A; A <= 0 is a domain error.
PeriodResult exact_period(long double amplitude);

// The continuous periodic weak solution through (A, 0): branches of
// A exp(-erf_inv(2 t / (sqrt(2 pi) A))^2) with alternating sign, zeros at
// the branch ends.
long double weak_solution(long double t, long double amplitude);

// tanh-sinh quadrature over (0, 1); the integrand receives both s and 1-s so
// endpoint-singular factors can be evaluated without cancellation.
struct QuadratureResult {
    long double value = 0.0L;
    long double abs_error_estimate = 0.0L;
    int levels = 0;
};
QuadratureResult integrate01(const std::function<long double(long double, long double)>& f,
                             long double target_rel_error = 1e-13L, int max_level = 11);

// T(A;k) = 4 A Integral_0^1 ds / sqrt(log((A^2+k^2)/(A^2 s^2+k^2))).
// Throws std::domain_error for k <= 0 (use exact_period for the limit).
PeriodResult regularized_period_quadrature(long double amplitude, long double k);

// The k -> 0 limit integrand path: 4 Integral_0^1 ds / sqrt(-2 log s),
// exposed for cross-checks against exact_period.
PeriodResult weak_limit_quadrature(long double amplitude);

struct OdeOptions {
    long double rel_tol = 1e-13L;
    long double abs_tol = 1e-15L;
    long double initial_step = 1e-3L;
};

// Dormand-Prince 5(4) trajectory from (A, 0); one sample per accepted step.
// Throws std::runtime_error on step-size underflow.
std::vector<PhasePoint> simulate_regularized(long double amplitude, long double k,
                                             long double t_max, const OdeOptions& opts = {});

// Period as the first return to the section y = 0, x > 0, with the crossing
// localized on the dense output by bisection.
PeriodResult regularized_period_ode(long double amplitude, long double k,
                                    const OdeOptions& opts = {});

// Time of the first x = 0 crossing (quarter period by symmetry).
long double time_to_first_x_zero(long double amplitude, long double k,
                                 const OdeOptions& opts = {});

// Energy H = y^2/2 + log(x^2 + k^2)/2 of the regularized system.
long double regularized_energy(long double x, long double y, long double k);

}  // namespace hbmosc

#endif
