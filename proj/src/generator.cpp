#include "fracops/generator.hpp"

#include <cmath>

#include "fracops/special.hpp"

namespace fracops {
namespace {

// Exact log moments over one panel [a, b]: int ln u du and int u ln u du.
double log_moment0(double a, double b) {
  const double fb = b * std::log(b) - b;
  const double fa = a == 0.0 ? 0.0 : a * std::log(a) - a;
  return fb - fa;
}

double log_moment1(double a, double b) {
  const double fb = 0.5 * b * b * std::log(b) - 0.25 * b * b;
  const double fa = a == 0.0 ? 0.0 : 0.5 * a * a * std::log(a) - 0.25 * a * a;
  return fb - fa;
}

}  // namespace

LogConvolution log_kernel_convolve(const SampledFunction& f) {
  const Index n = f.grid.size();
  const double h = f.grid.spacing();

  // Weight of the left/right node of the panel at lag k (u in [(k-1)h, kh]).
  auto left_weight = [&](Index k) {
    const double a = double(k - 1) * h;
    const double b = double(k) * h;
    return (log_moment1(a, b) - a * log_moment0(a, b)) / h;
  };
  auto right_weight = [&](Index k) {
    const double a = double(k - 1) * h;
    const double b = double(k) * h;
    return (b * log_moment0(a, b) - log_moment1(a, b)) / h;
  };

  Vector conv(n);
  Vector boundary(n);
  conv[0] = right_weight(1);
  for (Index l = 1; l < n; ++l) conv[l] = left_weight(l) + right_weight(l + 1);
  boundary[0] = -conv[0];
  for (Index i = 1; i < n; ++i) boundary[i] = left_weight(i) - conv[i];

  Matrix out(n, f.values.cols());
  for (Index i = 0; i < n; ++i) {
    out.row(i) = conv[0] * f.values.row(i);
    for (Index k = 1; k <= i; ++k) out.row(i) += conv[k] * f.values.row(i - k);
    out.row(i) += boundary[i] * f.values.row(0);
  }
  return {f, SampledFunction(f.grid, std::move(out))};
}

SampledFunction generator_apply(const SampledFunction& f) {
  const Index n = f.grid.size();
  if (n < 3) throw std::invalid_argument("generator_apply: requires n >= 3 nodes");
  const double h = f.grid.spacing();
  const Matrix& phi = log_kernel_convolve(f).output.values;

  Matrix deriv(n, phi.cols());
  deriv.row(0) = (-3.0 * phi.row(0) + 4.0 * phi.row(1) - phi.row(2)) / (2.0 * h);
  for (Index i = 1; i + 1 < n; ++i) deriv.row(i) = (phi.row(i + 1) - phi.row(i - 1)) / (2.0 * h);
  deriv.row(n - 1) = (3.0 * phi.row(n - 1) - 4.0 * phi.row(n - 2) + phi.row(n - 3)) / (2.0 * h);

  const double psi_one = digamma_fn(1.0);
  Matrix values = -psi_one * f.values + deriv;
  return SampledFunction(f.grid, std::move(values), /*singular_at_t0=*/true);
}

SampledFunction generator_power_closed_form(int degree, const UniformGrid& grid) {
  if (degree < 0) throw std::invalid_argument("generator_power_closed_form: requires degree >= 0");
  const Index n = grid.size();
  const double psi_k1 = digamma_fn(double(degree) + 1.0);
  Matrix values(n, 1);
  values(0, 0) = 0.0;
  for (Index i = 1; i < n; ++i) {
    const double tau = grid.node(i) - grid.interval().t0;
    const double power = degree == 0 ? 1.0 : std::pow(tau, degree);
    values(i, 0) = power * (std::log(tau) - psi_k1);
  }
  return SampledFunction(grid, std::move(values), /*singular_at_t0=*/degree == 0);
}

double difference_quotient_defect(int degree, FracOrder alpha, LebesgueExponent p,
                                  const UniformGrid& grid, double amplitude) {
  if (degree == 0 && p.is_infinite()) {
    throw std::invalid_argument(
        "difference_quotient_defect: A phi_0 has a log singularity outside L^inf");
  }
  if (!(alpha.alpha > 0.0)) {
    throw std::invalid_argument("difference_quotient_defect: requires alpha > 0");
  }
  SampledFunction f = sample_family(FamilyDescriptor::monomial(degree), grid);
  f.values *= amplitude;
  SampledFunction closed = generator_power_closed_form(degree, grid);
  const SampledFunction jf = apply_frac_integral(f, alpha);
  Matrix defect = (jf.values - f.values) / alpha.alpha - amplitude * closed.values;
  return lp_norm(SampledFunction(grid, std::move(defect), closed.singular_at_t0), p);
}

double generator_interior_l2_error(int degree, const UniformGrid& grid, double skirt) {
  const SampledFunction numeric =
      generator_apply(sample_family(FamilyDescriptor::monomial(degree), grid));
  const SampledFunction closed = generator_power_closed_form(degree, grid);
  const double h = grid.spacing();
  const double t0 = grid.interval().t0;
  double sum = 0.0;
  for (Index i = 0; i < grid.size(); ++i) {
    if (grid.node(i) - t0 <= skirt * h) continue;
    sum += h * (numeric.values.row(i) - closed.values.row(i)).squaredNorm();
  }
  return std::sqrt(sum);
}

RatioBound unboundedness_ratio(int degree, LebesgueExponent p, Interval interval) {
  if (degree < 1) throw std::invalid_argument("unboundedness_ratio: requires degree >= 1");
  if (p.is_infinite() || p.value() <= 1.0) {
    throw std::invalid_argument("unboundedness_ratio: requires 1 < p < infinity");
  }
  const double pv = p.value();
  const double T = interval.length();
  const double k = double(degree);
  const double harmonic = digamma_fn(k + 1.0) - digamma_fn(1.0);
  const double denom = std::pow(std::pow(T, k * pv + 1.0) / (k * pv + 1.0), 1.0 / pv);

  double numerator;
  if (pv == 2.0) {
    // Closed moments of tau^{2k} {1, ln, ln^2} on [0, T].
    const double m = 2.0 * k + 1.0;
    const double scale = std::pow(T, m);
    const double log_T = std::log(T);
    const double i0 = scale / m;
    const double i1 = scale * (log_T / m - 1.0 / (m * m));
    const double i2 = scale * (log_T * log_T / m - 2.0 * log_T / (m * m) + 2.0 / (m * m * m));
    numerator = std::sqrt(i2 - 2.0 * harmonic * i1 + harmonic * harmonic * i0);
  } else {
    // Composite Simpson, split at the interior zero tau = e^{H_k} if present.
    auto integrand = [&](double tau) {
      if (tau <= 0.0) return 0.0;
      return std::pow(std::pow(tau, k) * std::abs(std::log(tau) - harmonic), pv);
    };
    auto simpson = [&](double lo, double hi, int panels) {
      const double w = (hi - lo) / double(panels);
      double s = integrand(lo) + integrand(hi);
      for (int j = 1; j < panels; ++j) s += (j % 2 == 1 ? 4.0 : 2.0) * integrand(lo + j * w);
      return s * w / 3.0;
    };
    const double zero_at = std::exp(harmonic);
    double integral;
    if (zero_at < T) {
      integral = simpson(0.0, zero_at, 4096) + simpson(zero_at, T, 4096);
    } else {
      integral = simpson(0.0, T, 8192);
    }
    numerator = std::pow(integral, 1.0 / pv);
  }

  const double core = harmonic - std::log(T);
  const double bound =
      core <= 0.0 ? 0.0 : core * std::pow(1.0 - std::pow(2.0, -(k * pv + 1.0)), 1.0 / pv);
  return {numerator / denom, bound};
}

}  // namespace fracops
