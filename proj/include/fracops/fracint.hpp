#pragma once

#include <utility>
#include <vector>

#include "fracops/grid.hpp"

namespace fracops {

// Fractional order alpha >= 0; alpha = 0 acts as the identity.
struct FracOrder {
  FracOrder(double a) : alpha(a) {
    if (!(a >= 0.0)) throw std::invalid_argument("FracOrder: requires alpha >= 0");
  }
  double alpha;
};

// Product-integration rule: `rectangle` interpolates f by its left node value
// on each panel, `trapezoid` by the piecewise-linear interpolant. Both
// integrate the kernel (t-s)^{alpha-1} exactly against that interpolant, so
// no quadrature of the singular kernel is ever performed.
enum class Scheme { rectangle, trapezoid };

enum class ConvPath { direct, fft };

// Quadrature weights realizing J^alpha on a uniform grid. The rule is a pure
// discrete convolution in the lag i-j plus a per-row correction of the j = 0
// column:
//   (Kf)_i = sum_k conv[k] f_{i-k} + boundary[i] f_0.
// Invariants: all effective weights are >= 0, and every row sums to
// (t_i - t0)^alpha / Gamma(alpha+1), i.e. the rule is exact on constants.
class ConvKernelWeights {
 public:
  ConvKernelWeights(UniformGrid grid, FracOrder alpha, Scheme scheme);

  const UniformGrid& grid() const { return grid_; }
  double alpha() const { return alpha_; }
  Scheme scheme() const { return scheme_; }
  const Vector& conv_weights() const { return conv_; }
  const Vector& boundary_weights() const { return boundary_; }

  // Effective weight w_{ij}; zero above the diagonal.
  double weight(Index i, Index j) const {
    if (j > i) return 0.0;
    double w = conv_[i - j];
    if (j == 0) w += boundary_[i];
    return w;
  }

 private:
  UniformGrid grid_;
  double alpha_;
  Scheme scheme_;
  Vector conv_;
  Vector boundary_;
};

ConvKernelWeights build_weights(const UniformGrid& grid, FracOrder alpha, Scheme scheme);

// J^alpha f on the grid of f. alpha = 0 returns f unchanged. The fft path
// (requires n >= 8) evaluates the convolution part by zero-padded real FFT
// and agrees with the direct path to ~1e-12 relative.
SampledFunction apply_frac_integral(const SampledFunction& f, FracOrder alpha,
                                    Scheme scheme = Scheme::trapezoid,
                                    ConvPath path = ConvPath::direct);
SampledFunction apply_frac_integral(const SampledFunction& f, const ConvKernelWeights& weights,
                                    ConvPath path = ConvPath::direct);

// Exact coefficient in J^alpha (t-t0)^nu = c * (t-t0)^{nu+alpha}:
// c = Gamma(nu+1)/Gamma(nu+alpha+1), evaluated in log space.
double power_rule_coefficient(double nu, FracOrder alpha);

// || J^a(J^b f) - J^{a+b} f ||_p with the trapezoid scheme.
double semigroup_defect(const SampledFunction& f, FracOrder a, FracOrder b, LebesgueExponent p);

struct AlphaDefect {
  double alpha;
  double defect;
};

// defect(alpha) = || J^alpha f - f ||_p over a descending list of orders in
// [0, 1); for smooth f the defect decays like O(alpha).
std::vector<AlphaDefect> alpha_zero_profile(const SampledFunction& f, LebesgueExponent p,
                                            const std::vector<double>& alphas);

// Least-squares slope of log(defect) against log(alpha); entries with
// defect <= 0 or alpha <= 0 are skipped.
double fit_log_log_slope(const std::vector<AlphaDefect>& profile);

struct ContinuityGap {
  double discrete_gap;  // matrix p->p norm of K_a - K_{a0}
  double eta_bound;     // closed-form continuity bound, -> 0 as a -> a0
};

// Discrete order-continuity gap against the closed-form bound
//   eta = (1/Gamma(a)) int_0^{t1-t0} |w^{a-1} - w^{a0-1}| dw
//       + (t1-t0)^{a0} |Gamma(a0) - Gamma(a)| / (Gamma(a) Gamma(a0+1)),
// with the integral split at its single sign change w = 1.
ContinuityGap alpha_continuity_defect(FracOrder a, FracOrder a0, const UniformGrid& grid,
                                      LebesgueExponent p);

struct HorizonNorm {
  double horizon;
  double norm;
};

// Growth of || J^alpha sigma ||_{L^p(t0, T)} over increasing horizons T,
// demonstrating that J^alpha does not map L^p(t0, inf) into itself. For
// p = inf the profile is the closed form (T-t0)^alpha / Gamma(alpha+1); for
// p < inf it is quadrature on the tail family sigma_p.
std::vector<HorizonNorm> divergence_profile(FracOrder alpha, LebesgueExponent p, double t0,
                                            const std::vector<double>& horizons,
                                            Index nodes_per_horizon = 1024);

// || sigma_p ||_{L^p(t0, inf)} = (alpha p)^{-1/p}; equals 1 for sigma_inf.
double sigma_p_norm_infinite(FracOrder alpha, LebesgueExponent p);

}  // namespace fracops
