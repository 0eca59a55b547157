#include "fracops/bounds.hpp"

#include <cmath>
#include <iostream>
#include <vector>

#include "fracops/special.hpp"

namespace fracops {
namespace {

constexpr double bracket_lo = 1.0 + 1e-9;
constexpr double bracket_hi = 1e4;

double require_finite_p_in_open_range(LebesgueExponent p, const char* who) {
  if (p.is_infinite() || p.value() <= 1.0) {
    throw std::invalid_argument(std::string(who) + ": requires 1 < p < infinity");
  }
  return p.value();
}

}  // namespace

double generic_upper_bound(FracOrder alpha, Interval interval) {
  if (!(alpha.alpha > 0.0)) throw std::invalid_argument("generic_upper_bound: requires alpha > 0");
  return std::pow(interval.length(), alpha.alpha) / gamma_fn(alpha.alpha + 1.0);
}

double exact_norm_endpoint(FracOrder alpha, LebesgueExponent p, Interval interval) {
  if (!p.is_infinite() && p.value() != 1.0) {
    throw std::invalid_argument("exact_norm_endpoint: only p = 1 and p = inf are exact");
  }
  return generic_upper_bound(alpha, interval);
}

RefinedUpperBounds refined_upper_bounds(FracOrder alpha, LebesgueExponent p, Interval interval) {
  const double pv = require_finite_p_in_open_range(p, "refined_upper_bounds");
  const double a = alpha.alpha;
  if (!(a > 0.0)) throw std::invalid_argument("refined_upper_bounds: requires alpha > 0");
  const double ps = p.conjugate().value();
  const double span = std::pow(interval.length(), a);
  const double log_gamma_a = log_gamma(a);

  RefinedUpperBounds out;
  if (a > 1.0 / ps) {
    out.upper_i = span * std::exp(-log_gamma_a) /
                  (std::pow((a - 1.0) * pv + 1.0, 1.0 / pv) * std::pow(a * ps, 1.0 / ps));
  }
  if (a > 1.0 / pv) {
    out.upper_ii = span * std::exp(-log_gamma_a) /
                   (std::pow((a - 1.0) * ps + 1.0, 1.0 / ps) * std::pow(a * pv, 1.0 / pv));
  }
  double best = generic_upper_bound(alpha, interval);
  if (out.upper_i) best = std::min(best, *out.upper_i);
  if (out.upper_ii) best = std::min(best, *out.upper_ii);
  out.best = best;

  if (a >= 1.0) {
    out.strict = true;
  } else {
    // Strictness below order one needs p < p1 for bound i or p > p2 for
    // bound ii; when a root sits outside the bisection bracket the
    // comparison is resolved from the bracket side alone, never extrapolated.
    bool strict = false;
    const auto [eta_lo, theta_lo] = eval_eta_theta(bracket_lo);
    const auto [eta_hi, theta_hi] = eval_eta_theta(bracket_hi);
    if (out.upper_i) {
      if (a >= eta_hi) {
        strict = pv < bracket_hi;  // p1 beyond the bracket
      } else if (a > eta_lo) {
        strict = pv < threshold_exponents(a).first;
      }
      // a <= eta(1+1e-9): p1 below every admissible p, bound i never strict.
    }
    if (!strict && out.upper_ii) {
      if (a >= theta_lo) {
        strict = true;  // p2 at or below the bracket: every p exceeds it
      } else if (a > theta_hi) {
        strict = pv > threshold_exponents(a).second;
      }
      // a <= theta(1e4): p2 beyond the bracket, not provable here.
    }
    out.strict = strict;
  }
  return out;
}

std::pair<double, double> eval_eta_theta(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("eval_eta_theta: requires p > 1");
  if (p <= 50.0) {
    const double eta =
        std::pow(p, p - 1.0) * (p - 1.0) / (std::pow(p, p) - std::pow(p - 1.0, p - 1.0));
    const double theta =
        std::pow(p, 1.0 / (p - 1.0)) / (std::pow(p, p / (p - 1.0)) - (p - 1.0));
    return {eta, theta};
  }
  // Same expressions with numerator and denominator divided by the leading
  // power, so nothing overflows for large p.
  const double eta = ((p - 1.0) / p) /
                     (1.0 - std::exp((p - 1.0) * std::log(p - 1.0) - p * std::log(p)));
  const double theta =
      (1.0 / p) / (1.0 - (p - 1.0) * std::exp(-(p / (p - 1.0)) * std::log(p)));
  return {eta, theta};
}

namespace {

// Bisection for a monotone function; residual-driven with a 200-step cap.
double bisect_monotone(double target, bool increasing, const auto& fn, const char* who) {
  double lo = bracket_lo;
  double hi = bracket_hi;
  double flo = fn(lo);
  double fhi = fn(hi);
  const double sign = increasing ? 1.0 : -1.0;
  if (sign * (target - flo) < 0.0 || sign * (fhi - target) < 0.0) {
    throw std::domain_error(std::string(who) +
                            ": root lies outside the representable bracket [1+1e-9, 1e4]");
  }
  double mid = lo;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double fm = fn(mid);
    if (std::abs(fm - target) <= 1e-12) return mid;
    if (sign * (fm - target) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * mid) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::pair<double, double> threshold_exponents(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("threshold_exponents: requires alpha in (0, 1)");
  }
  const double p1 = bisect_monotone(
      alpha, true, [](double p) { return eval_eta_theta(p).first; }, "threshold_exponents(eta)");
  const double p2 = bisect_monotone(
      alpha, false, [](double p) { return eval_eta_theta(p).second; },
      "threshold_exponents(theta)");
  return {p1, p2};
}

double zeta_lower_bound(FracOrder alpha, LebesgueExponent p, double beta, Interval interval) {
  const double pv = require_finite_p_in_open_range(p, "zeta_lower_bound");
  const double a = alpha.alpha;
  if (!(a > 0.0)) throw std::invalid_argument("zeta_lower_bound: requires alpha > 0");
  if (!(beta >= 0.0) || !(beta < 1.0 / pv)) {
    throw std::invalid_argument("zeta_lower_bound: requires 0 <= beta < 1/p");
  }
  const double gamma_ratio = std::exp(log_gamma(1.0 - beta) - log_gamma(a + 1.0 - beta));
  return std::pow(interval.length(), a) * gamma_ratio * std::pow(1.0 - beta * pv, 1.0 / pv) /
         std::pow((a - beta) * pv + 1.0, 1.0 / pv);
}

BestLowerBound best_lower_bound(FracOrder alpha, LebesgueExponent p, Interval interval) {
  const double pv = require_finite_p_in_open_range(p, "best_lower_bound");
  const double beta_max = 1.0 / pv - 1e-9;
  auto zeta = [&](double b) { return zeta_lower_bound(alpha, p, b, interval); };

  constexpr int scan_points = 64;
  std::vector<double> values(scan_points);
  int arg = 0;
  for (int j = 0; j < scan_points; ++j) {
    values[j] = zeta(beta_max * double(j) / double(scan_points - 1));
    if (values[j] > values[arg]) arg = j;
  }
  int maxima = 0;
  for (int j = 1; j + 1 < scan_points; ++j) {
    if (values[j] > values[j - 1] && values[j] > values[j + 1]) ++maxima;
  }
  if (values[0] > values[1]) ++maxima;
  if (values[scan_points - 1] > values[scan_points - 2]) ++maxima;
  const bool unimodal = maxima <= 1;
  if (!unimodal) {
    std::cerr << "fracops: warning: zeta scan is multimodal for alpha = " << alpha.alpha
              << ", p = " << pv << "; golden-section result may be local\n";
  }

  double lo = beta_max * double(std::max(0, arg - 1)) / double(scan_points - 1);
  double hi = beta_max * double(std::min(scan_points - 1, arg + 1)) / double(scan_points - 1);
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = zeta(x1);
  double f2 = zeta(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = zeta(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = zeta(x1);
    }
  }
  double beta_star = 0.5 * (lo + hi);
  double value = zeta(beta_star);
  if (zeta(0.0) >= value) {  // maximization must dominate the beta = 0 seed
    beta_star = 0.0;
    value = zeta(0.0);
  }
  return {beta_star, value, unimodal};
}

double phi_beta_ratio(FracOrder alpha, LebesgueExponent p, double beta, Interval interval) {
  const double a = alpha.alpha;
  if (!(a > 0.0)) throw std::invalid_argument("phi_beta_ratio: requires alpha > 0");
  if (p.is_infinite()) throw std::invalid_argument("phi_beta_ratio: requires finite p");
  if (p.value() == 1.0) {
    if (!(beta > 0.0) || !(beta < 1.0)) {
      throw std::invalid_argument("phi_beta_ratio: p = 1 requires beta in (0, 1)");
    }
    return std::pow(interval.length(), a) *
           std::exp(log_gamma(2.0 - beta) - log_gamma(a + 2.0 - beta));
  }
  return zeta_lower_bound(alpha, p, beta, interval);
}

NormBoundReport compile_report(FracOrder alpha, LebesgueExponent p, Interval interval) {
  const double a = alpha.alpha;
  if (!(a > 0.0)) throw std::invalid_argument("compile_report: requires alpha > 0");
  NormBoundReport report{a,
                         p.value(),
                         interval,
                         generic_upper_bound(alpha, interval),
                         std::nullopt,
                         std::nullopt,
                         0.0,
                         false,
                         0.0,
                         std::nullopt,
                         std::nullopt};

  if (a < 1.0) {
    try {
      const auto [p1, p2] = threshold_exponents(a);
      report.p1_alpha = p1;
      report.p2_alpha = p2;
    } catch (const std::domain_error&) {
      // Thresholds outside the representable bracket stay unset.
    }
  }

  if (p.is_infinite() || p.value() == 1.0) {
    const double exact = exact_norm_endpoint(alpha, p, interval);
    report.best_upper = exact;
    report.lower = exact;
    return report;
  }

  const RefinedUpperBounds refined = refined_upper_bounds(alpha, p, interval);
  report.upper_i = refined.upper_i;
  report.upper_ii = refined.upper_ii;
  report.best_upper = refined.best;
  report.strict_flag = refined.strict;
  report.lower = zeta_lower_bound(alpha, p, 0.0, interval);
  return report;
}

}  // namespace fracops
