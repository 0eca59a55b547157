#include "fracops/fracint.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>

#include "fracops/norm_est.hpp"
#include "fracops/special.hpp"

namespace fracops {
namespace {

// k^e - (k-1)^e for k >= 1 without cancellation for large k.
double power_diff(double k, double e) {
  if (k == 1.0) return 1.0;
  return -std::pow(k, e) * std::expm1(e * std::log1p(-1.0 / k));
}

}  // namespace

ConvKernelWeights::ConvKernelWeights(UniformGrid grid, FracOrder alpha, Scheme scheme)
    : grid_(grid), alpha_(alpha.alpha), scheme_(scheme) {
  if (!(alpha_ > 0.0)) {
    throw std::invalid_argument("build_weights: requires alpha > 0 (alpha = 0 needs no weights)");
  }
  const Index n = grid.size();
  const double h = grid.spacing();
  const double a = alpha_;
  conv_.resize(n);
  boundary_.setZero(n);

  if (scheme == Scheme::rectangle) {
    // w_{ij} = h^a/Gamma(a+1) * [(i-j)^a - (i-j-1)^a], applied to left values.
    const double scale = std::pow(h, a) / gamma_fn(a + 1.0);
    conv_[0] = 0.0;
    for (Index k = 1; k < n; ++k) conv_[k] = scale * power_diff(double(k), a);
    return;
  }

  // Product piecewise-linear rule. Interior lag weights are second
  // differences of k^{a+1}; the j = 0 column carries the exact boundary
  // moment, stored as a correction on top of the convolution part.
  const double scale = std::pow(h, a) / gamma_fn(a + 2.0);
  std::vector<double> d(n + 1, 0.0);  // d[k] = k^{a+1} - (k-1)^{a+1}
  for (Index k = 1; k <= n; ++k) d[k] = power_diff(double(k), a + 1.0);
  conv_[0] = scale;
  for (Index k = 1; k < n; ++k) conv_[k] = scale * (d[k + 1] - d[k]);
  boundary_[0] = -conv_[0];  // row 0 is the empty integral
  for (Index i = 1; i < n; ++i) {
    const double w_i0 = scale * ((1.0 + a) * std::pow(double(i), a) - d[i]);
    boundary_[i] = w_i0 - conv_[i];
  }
}

ConvKernelWeights build_weights(const UniformGrid& grid, FracOrder alpha, Scheme scheme) {
  return ConvKernelWeights(grid, alpha, scheme);
}

namespace {

Matrix convolve_direct(const Vector& conv, const Matrix& values) {
  const Index n = values.rows();
  Matrix out(n, values.cols());
  for (Index i = 0; i < n; ++i) {
    out.row(i) = conv[0] * values.row(i);
    for (Index k = 1; k <= i; ++k) out.row(i) += conv[k] * values.row(i - k);
  }
  return out;
}

Matrix convolve_fft(const Vector& conv, const Matrix& values) {
  const Index n = values.rows();
  Index len = 1;
  while (len < 2 * n) len *= 2;

  Eigen::FFT<double> fft;
  std::vector<double> padded(static_cast<std::size_t>(len), 0.0);
  for (Index i = 0; i < n; ++i) padded[i] = conv[i];
  std::vector<std::complex<double>> kernel_hat;
  fft.fwd(kernel_hat, padded);

  Matrix out(n, values.cols());
  std::vector<std::complex<double>> col_hat;
  std::vector<double> col(static_cast<std::size_t>(len));
  for (Index j = 0; j < values.cols(); ++j) {
    std::fill(col.begin(), col.end(), 0.0);
    for (Index i = 0; i < n; ++i) col[i] = values(i, j);
    fft.fwd(col_hat, col);
    for (Index i = 0; i < len; ++i) col_hat[i] *= kernel_hat[i];
    fft.inv(col, col_hat);
    for (Index i = 0; i < n; ++i) out(i, j) = col[i];
  }
  return out;
}

}  // namespace

SampledFunction apply_frac_integral(const SampledFunction& f, const ConvKernelWeights& weights,
                                    ConvPath path) {
  if (!(f.grid == weights.grid())) {
    throw std::invalid_argument("apply_frac_integral: grid mismatch between f and weights");
  }
  if (path == ConvPath::fft && f.grid.size() < 8) {
    throw std::invalid_argument("apply_frac_integral: fft path requires n >= 8");
  }
  Matrix out = path == ConvPath::direct ? convolve_direct(weights.conv_weights(), f.values)
                                        : convolve_fft(weights.conv_weights(), f.values);
  out += weights.boundary_weights() * f.values.row(0);
  return SampledFunction(f.grid, std::move(out));
}

SampledFunction apply_frac_integral(const SampledFunction& f, FracOrder alpha, Scheme scheme,
                                    ConvPath path) {
  if (alpha.alpha == 0.0) return f;  // J^0 is the identity, exactly
  return apply_frac_integral(f, build_weights(f.grid, alpha, scheme), path);
}

double power_rule_coefficient(double nu, FracOrder alpha) {
  if (!(nu > -1.0)) throw std::invalid_argument("power_rule_coefficient: requires nu > -1");
  return std::exp(log_gamma(nu + 1.0) - log_gamma(nu + alpha.alpha + 1.0));
}

double semigroup_defect(const SampledFunction& f, FracOrder a, FracOrder b, LebesgueExponent p) {
  SampledFunction nested = apply_frac_integral(apply_frac_integral(f, b), a);
  SampledFunction direct = apply_frac_integral(f, FracOrder(a.alpha + b.alpha));
  return lp_norm(SampledFunction(f.grid, nested.values - direct.values), p);
}

std::vector<AlphaDefect> alpha_zero_profile(const SampledFunction& f, LebesgueExponent p,
                                            const std::vector<double>& alphas) {
  std::vector<AlphaDefect> out;
  out.reserve(alphas.size());
  double prev = std::numeric_limits<double>::infinity();
  for (double a : alphas) {
    if (!(a >= 0.0) || a >= 1.0) {
      throw std::invalid_argument("alpha_zero_profile: orders must lie in [0, 1)");
    }
    if (a > prev) throw std::invalid_argument("alpha_zero_profile: orders must be descending");
    prev = a;
    if (a == 0.0) {
      out.push_back({0.0, 0.0});
      continue;
    }
    SampledFunction g = apply_frac_integral(f, FracOrder(a));
    out.push_back({a, lp_norm(SampledFunction(f.grid, g.values - f.values,
                                              f.singular_at_t0),
                              p)});
  }
  return out;
}

double fit_log_log_slope(const std::vector<AlphaDefect>& profile) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& pt : profile) {
    if (!(pt.alpha > 0.0) || !(pt.defect > 0.0)) continue;
    const double x = std::log(pt.alpha);
    const double y = std::log(pt.defect);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw std::invalid_argument("fit_log_log_slope: needs at least two usable points");
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ContinuityGap alpha_continuity_defect(FracOrder a, FracOrder a0, const UniformGrid& grid,
                                      LebesgueExponent p) {
  if (!(a.alpha > 0.0) || !(a0.alpha > 0.0)) {
    throw std::invalid_argument("alpha_continuity_defect: requires positive orders");
  }

  OperatorMatrix ka = build_operator_matrix(grid, a, Scheme::trapezoid);
  OperatorMatrix ka0 = build_operator_matrix(grid, a0, Scheme::trapezoid);
  Matrix diff = ka.entries() - ka0.entries();
  const double gap = matrix_p_norm(diff, p, EstimateOptions{}).value;

  // eta bound: the kernel-difference integral has a single sign change at
  // w = 1, so both pieces are available in closed form.
  const double T = grid.interval().length();
  const double av = a.alpha;
  const double a0v = a0.alpha;
  auto prim = [](double x, double e) { return std::pow(x, e) / e; };
  const double m = std::min(T, 1.0);
  double integral = std::abs(prim(m, av) - prim(m, a0v));
  if (T > 1.0) {
    integral += std::abs((prim(T, av) - prim(1.0, av)) - (prim(T, a0v) - prim(1.0, a0v)));
  }
  const double ga = gamma_fn(av);
  const double ga0 = gamma_fn(a0v);
  const double eta =
      integral / ga + std::pow(T, a0v) * std::abs(ga0 - ga) / (ga * gamma_fn(a0v + 1.0));
  return {gap, eta};
}

std::vector<HorizonNorm> divergence_profile(FracOrder alpha, LebesgueExponent p, double t0,
                                            const std::vector<double>& horizons,
                                            Index nodes_per_horizon) {
  std::vector<HorizonNorm> out;
  out.reserve(horizons.size());
  double prev = t0;
  for (double T : horizons) {
    if (!(T > t0 + 1.0)) throw std::invalid_argument("divergence_profile: requires T > t0 + 1");
    if (!(T > prev)) throw std::invalid_argument("divergence_profile: horizons must increase");
    prev = T;
    if (p.is_infinite()) {
      out.push_back({T, std::pow(T - t0, alpha.alpha) / gamma_fn(alpha.alpha + 1.0)});
      continue;
    }
    UniformGrid grid(Interval(t0, T), nodes_per_horizon);
    SampledFunction sigma = sample_family(FamilyDescriptor::sigma_p(alpha.alpha, p.value()), grid);
    out.push_back({T, lp_norm(apply_frac_integral(sigma, alpha), p)});
  }
  return out;
}

double sigma_p_norm_infinite(FracOrder alpha, LebesgueExponent p) {
  if (!(alpha.alpha > 0.0)) throw std::invalid_argument("sigma_p_norm_infinite: requires alpha > 0");
  if (p.is_infinite()) return 1.0;
  return std::pow(alpha.alpha * p.value(), -1.0 / p.value());
}

}  // namespace fracops
