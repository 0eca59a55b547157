#pragma once

#include <optional>
#include <utility>

#include "fracops/fracint.hpp"
#include "fracops/grid.hpp"

namespace fracops {

// Closed-form upper/lower bounds for the L^p -> L^p operator norm of
// J^alpha on [t0, t1], collected for one (alpha, p, interval).
//
// `strict_flag` records whether best_upper < generic_upper is guaranteed by
// the closed-form theory: always for alpha >= 1 and 1 < p < infinity, and for
// alpha < 1 exactly when the applicable refined bound sits on the sharp side
// of its threshold exponent (p < p1_alpha for bound i, p > p2_alpha for
// bound ii).
struct NormBoundReport {
  double alpha;
  double p;  // may be infinity
  Interval interval;
  double generic_upper;
  std::optional<double> upper_i;
  std::optional<double> upper_ii;
  double best_upper;
  bool strict_flag;
  double lower;
  std::optional<double> p1_alpha;
  std::optional<double> p2_alpha;
};

// (t1-t0)^alpha / Gamma(alpha+1); valid bound for every p in [1, inf].
double generic_upper_bound(FracOrder alpha, Interval interval);

// Exact operator norm at the endpoints p = 1 and p = inf, where it coincides
// with the generic bound.
double exact_norm_endpoint(FracOrder alpha, LebesgueExponent p, Interval interval);

struct RefinedUpperBounds {
  std::optional<double> upper_i;   // requires alpha > 1/p*
  std::optional<double> upper_ii;  // requires alpha > 1/p
  double best;                     // min of the applicable bounds and the generic one
  bool strict;                     // best < generic guaranteed
};

// Interpolation-free upper bounds for 1 < p < inf:
//   (i)  (t1-t0)^alpha / (Gamma(alpha) [(alpha-1)p+1]^{1/p} (alpha p*)^{1/p*})
//   (ii) the same expression with p and p* exchanged.
RefinedUpperBounds refined_upper_bounds(FracOrder alpha, LebesgueExponent p, Interval interval);

// The threshold functions
//   eta(p)   = p^{p-1}(p-1) / (p^p - (p-1)^{p-1})      (increasing, 0 -> 1)
//   theta(p) = p^{1/(p-1)} / (p^{p/(p-1)} - (p-1))     (decreasing, 1 -> 0)
// on (1, inf); evaluated in a log-stabilized form for p > 50.
std::pair<double, double> eval_eta_theta(double p);

// Unique roots p1, p2 in (1, inf) of eta(p1) = alpha and theta(p2) = alpha,
// by bisection on the bracket [1 + 1e-9, 1e4]; residuals <= 1e-10. Throws if
// the root falls outside the double-representable bracket (this happens for
// alpha below ~0.047 on the eta side and below ~1e-4 on the theta side).
std::pair<double, double> threshold_exponents(double alpha);

// zeta(beta) = (t1-t0)^alpha Gamma(1-beta)(1-beta p)^{1/p}
//              / (Gamma(alpha+1-beta) [(alpha-beta)p+1]^{1/p}),
// a computable lower bound for the norm for any beta in [0, 1/p).
double zeta_lower_bound(FracOrder alpha, LebesgueExponent p, double beta, Interval interval);

struct BestLowerBound {
  double beta_star;
  double value;
  bool scan_unimodal;  // false if the seeding scan saw multiple local maxima
};

// Maximizes zeta over beta by golden-section seeded with a 64-point scan;
// warns on stderr if the scan is not unimodal.
BestLowerBound best_lower_bound(FracOrder alpha, LebesgueExponent p, Interval interval);

// Rayleigh ratio achieved by the power family (t-t0)^{-beta}:
// for p = 1 it is Gamma(2-beta)(t1-t0)^alpha / Gamma(alpha+2-beta), which
// approaches the exact norm as beta -> 1^- without attaining it; for p > 1
// it coincides with zeta_lower_bound.
double phi_beta_ratio(FracOrder alpha, LebesgueExponent p, double beta, Interval interval);

// Full report for one (alpha, p, interval); p in {1, inf} routes to the
// exact endpoint value.
NormBoundReport compile_report(FracOrder alpha, LebesgueExponent p, Interval interval);

}  // namespace fracops
