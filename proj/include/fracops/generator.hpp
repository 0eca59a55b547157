#pragma once

#include "fracops/fracint.hpp"
#include "fracops/grid.hpp"

namespace fracops {

// Phi(t) = int_{t0}^t ln(t-s) f(s) ds together with its input. Phi(t0) = 0,
// and for constant f the output is (t-t0)(ln(t-t0) - 1) x up to quadrature
// tolerance (exactly, up to roundoff, since the rule integrates the kernel
// against piecewise-linear interpolants exactly).
struct LogConvolution {
  SampledFunction input;
  SampledFunction output;
};

// Product piecewise-linear rule with exact log moments; direct O(n^2).
LogConvolution log_kernel_convolve(const SampledFunction& f);

// A f = -psi(1) f + d/dt Phi, the derivative taken by second-order finite
// differences (centered interior, one-sided ends). The log kernel makes the
// nodes next to t0 low-accuracy, so the result is flagged singular there and
// excluded from sup-norms.
SampledFunction generator_apply(const SampledFunction& f);

// Closed form A phi_k for the monomial phi_k(t) = (t-t0)^k:
//   A phi_k(t) = (t-t0)^k [ ln(t-t0) - psi(k+1) ],
// with value 0 at the t0 node (flagged singular when k = 0).
SampledFunction generator_power_closed_form(int degree, const UniformGrid& grid);

// || (J^alpha phi_k - phi_k)/alpha - A phi_k ||_p, the difference-quotient
// defect of the semigroup derivative at order zero. p = inf is rejected for
// k = 0 since A phi_0 has a log singularity outside L^inf.
double difference_quotient_defect(int degree, FracOrder alpha, LebesgueExponent p,
                                  const UniformGrid& grid, double amplitude = 1.0);

// Discrete L^2 distance between generator_apply(phi_k) and the closed form,
// over the nodes with t - t0 > skirt * h (the log kernel spoils accuracy at
// the endpoint itself).
double generator_interior_l2_error(int degree, const UniformGrid& grid, double skirt = 2.0);

struct RatioBound {
  double ratio;  // |A~ phi_k|_p / |phi_k|_p with A~ = A + psi(1) Id
  double bound;  // [psi(k+1) - psi(1) - ln(t1-t0)] [1 - 2^{-kp-1}]^{1/p}, clamped at 0
};

// Growth of the generator Rayleigh ratios along the monomial family,
// demonstrating unboundedness: the ratio exceeds `bound`, which grows like
// the harmonic numbers. p = 2 uses closed-form log moments; other p a split
// composite quadrature.
RatioBound unboundedness_ratio(int degree, LebesgueExponent p, Interval interval);

}  // namespace fracops
