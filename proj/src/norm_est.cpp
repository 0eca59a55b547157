#include "fracops/norm_est.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

namespace fracops {

OperatorMatrix build_operator_matrix(const UniformGrid& grid, FracOrder alpha, Scheme scheme) {
  const ConvKernelWeights weights = build_weights(grid, alpha, scheme);
  const Index n = grid.size();
  Matrix K = Matrix::Zero(n, n);
  const Vector& conv = weights.conv_weights();
  for (Index k = 0; k < n; ++k) K.diagonal(-k).setConstant(conv[k]);
  K.col(0) += weights.boundary_weights();
  K.triangularView<Eigen::StrictlyUpper>().setZero();
  return OperatorMatrix(std::move(K), grid, alpha.alpha, scheme);
}

std::string to_string(NormMethod method) {
  switch (method) {
    case NormMethod::svd: return "svd";
    case NormMethod::power2: return "power2";
    case NormMethod::boyd: return "boyd";
    case NormMethod::brute: return "brute";
    case NormMethod::exact: return "exact";
  }
  return "unknown";
}

namespace {

double vector_p_norm(const Vector& v, double p) {
  if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
  if (p == 1.0) return v.cwiseAbs().sum();
  if (p == 2.0) return v.norm();
  double s = 0.0;
  for (Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), p);
  return std::pow(s, 1.0 / p);
}

// Duality map for the l_p norm: phi_p(v)_i = sign(v_i) |v_i|^{p-1}.
Vector signature_power(const Vector& v, double p) {
  Vector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    out[i] = v[i] < 0.0 ? -std::pow(a, p - 1.0) : std::pow(a, p - 1.0);
  }
  return out;
}

struct PowerRun {
  double value = 0.0;
  int iterations = 0;
  double residual = std::numeric_limits<double>::infinity();
  Vector maximizer;
  bool converged = false;
};

// Nonlinear power method for the matrix p -> p norm (reduces to the
// classical power iteration on K^T K when p = 2). The dual residual
// |K^T phi_p(Kx)|_{p*} / |Kx|_p^p - 1 is nonnegative and vanishes exactly at
// stationary points of the Rayleigh ratio.
PowerRun power_method_run(const Matrix& K, double p, Vector x, double tol, int max_iter) {
  const double ps = p / (p - 1.0);
  PowerRun run;
  const double nx = vector_p_norm(x, p);
  if (nx == 0.0) return run;
  x /= nx;
  for (int it = 1; it <= max_iter; ++it) {
    Vector y = K * x;
    const double gamma = vector_p_norm(y, p);
    run.iterations = it;
    if (gamma == 0.0) {
      run.value = 0.0;
      run.residual = 0.0;
      run.maximizer = x;
      run.converged = true;
      return run;
    }
    Vector z = K.transpose() * signature_power(y, p);
    const double dual = vector_p_norm(z, ps);
    const double residual = dual / std::pow(gamma, p) - 1.0;
    if (gamma >= run.value) {
      run.value = gamma;
      run.maximizer = x;
      run.residual = std::abs(residual);
    }
    if (std::abs(residual) <= tol) {
      run.converged = true;
      return run;
    }
    x = signature_power(z, ps);
    x /= vector_p_norm(x, p);
  }
  return run;
}

std::vector<Vector> make_starts(Index n, const EstimateOptions& opts) {
  if (!opts.starts.empty()) return opts.starts;
  std::vector<Vector> starts;
  starts.reserve(opts.restarts);
  starts.push_back(Vector::Ones(n));
  for (int r = 1; r < opts.restarts; ++r) {
    std::mt19937 rng(opts.seed + 0x9e3779b9u * static_cast<unsigned>(r));
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector x(n);
    for (Index i = 0; i < n; ++i) x[i] = std::abs(normal(rng));
    starts.push_back(std::move(x));
  }
  return starts;
}

NormEstimate power_method_norm(const Matrix& K, double p, const EstimateOptions& opts,
                               NormMethod method) {
  const std::vector<Vector> starts = make_starts(K.rows(), opts);
  std::vector<PowerRun> runs(starts.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      runs[r] = power_method_run(K, p, starts[r], opts.tolerance, opts.max_iterations);
    }
  };
  const int threads = std::max(1, opts.threads);
  if (threads == 1 || starts.size() <= 1) {
    work(0, starts.size());
  } else {
    // Restarts are independent; the reduction below is order-insensitive.
    const std::size_t chunks = std::min<std::size_t>(threads, starts.size());
    std::vector<std::future<void>> futures;
    const std::size_t per = (starts.size() + chunks - 1) / chunks;
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = c * per;
      const std::size_t end = std::min(starts.size(), begin + per);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, work, begin, end));
    }
    for (auto& f : futures) f.get();
  }

  const PowerRun* best = &runs.front();
  bool any_converged = runs.front().converged;
  int total_iterations = runs.front().iterations;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    total_iterations += runs[r].iterations;
    any_converged = any_converged || runs[r].converged;
    if (runs[r].value > best->value) best = &runs[r];
  }

  NormEstimate est{best->value, p,       method, K.rows(), total_iterations,
                   best->residual, best->maximizer};
  if (!any_converged || !best->converged) {
    throw NonConvergenceError("matrix_p_norm: power method did not converge", est);
  }
  return est;
}

}  // namespace

NormEstimate matrix_p_norm(const Matrix& K, LebesgueExponent p, const EstimateOptions& opts) {
  const Index n = K.rows();
  if (K.cols() != n) throw std::invalid_argument("matrix_p_norm: matrix must be square");

  if (p.is_infinite()) {
    Index arg = 0;
    const Vector row_sums = K.cwiseAbs().rowwise().sum();
    const double value = row_sums.maxCoeff(&arg);
    // The constant-sign vector attains the maximum row sum.
    Vector x(n);
    for (Index j = 0; j < n; ++j) x[j] = K(arg, j) < 0.0 ? -1.0 : 1.0;
    return {value, p.value(), NormMethod::exact, n, 0, 0.0, std::move(x)};
  }
  if (p.value() == 1.0) {
    Index arg = 0;
    const double value = K.cwiseAbs().colwise().sum().maxCoeff(&arg);
    Vector x = Vector::Zero(n);
    x[arg] = 1.0;
    return {value, 1.0, NormMethod::exact, n, 0, 0.0, std::move(x)};
  }
  if (p.value() == 2.0 && n <= opts.dense_svd_limit) {
    Eigen::BDCSVD<Matrix> svd(K, Eigen::ComputeThinV);
    Vector x = svd.matrixV().col(0);
    if (x.sum() < 0.0) x = -x;  // fix the sign indeterminacy
    return {svd.singularValues()[0], 2.0, NormMethod::svd, n, 0, 0.0, std::move(x)};
  }
  return power_method_norm(K, p.value(), opts,
                           p.value() == 2.0 ? NormMethod::power2 : NormMethod::boyd);
}

NormEstimate estimate_norm(const OperatorMatrix& matrix, LebesgueExponent p,
                           const EstimateOptions& opts) {
  return matrix_p_norm(matrix.entries(), p, opts);
}

namespace {

// Rayleigh ratio |Kx|_p / |x|_p with incremental coordinate updates:
// `image` tracks Kx, `power_sum` tracks sum |x_j|^p over the frozen
// coordinates while coordinate i varies.
struct RatioEvaluator {
  const Matrix& K;
  double p;

  double full(const Vector& x, Vector& image) const {
    image.noalias() = K * x;
    return vector_p_norm(image, p) / vector_p_norm(x, p);
  }

  double with_coordinate(const Vector& image_without_i, const Vector& column, double partial_power,
                         double c) const {
    const double denom = std::pow(partial_power + std::pow(c, p), 1.0 / p);
    Vector img = image_without_i + c * column;
    return vector_p_norm(img, p) / denom;
  }
};

}  // namespace

double brute_force_norm(const Matrix& K, LebesgueExponent p) {
  const Index n = K.rows();
  if (n > 8) throw std::invalid_argument("brute_force_norm: requires n <= 8");
  if (p.is_infinite()) {
    return matrix_p_norm(K, p).value;  // row-sum identity is already exact
  }
  const double pv = p.value();
  RatioEvaluator eval{K, pv};

  constexpr int n_starts = 1024;
  constexpr int scan_points = 17;
  constexpr double coord_hi = 4.0;
  constexpr double golden = 0.6180339887498949;

  double best = 0.0;
  Vector image(n);
  for (int s = 0; s < n_starts; ++s) {
    std::mt19937 rng(9001u + static_cast<unsigned>(s));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Vector x(n);
    for (Index i = 0; i < n; ++i) x[i] = uniform(rng) + 1e-3;
    x /= vector_p_norm(x, pv);

    double current = eval.full(x, image);
    for (int sweep = 0; sweep < 200; ++sweep) {
      const double before = current;
      for (Index i = 0; i < n; ++i) {
        const Vector column = K.col(i);
        const Vector image_wo = image - x[i] * column;
        double partial = 0.0;
        for (Index j = 0; j < n; ++j) {
          if (j != i) partial += std::pow(std::abs(x[j]), pv);
        }
        auto g = [&](double c) { return eval.with_coordinate(image_wo, column, partial, c); };

        // coarse scan, then golden-section inside the bracketing cell
        double best_c = x[i];
        double best_v = current;
        for (int q = 0; q < scan_points; ++q) {
          const double c = coord_hi * double(q) / double(scan_points - 1);
          const double v = g(c);
          if (v > best_v) {
            best_v = v;
            best_c = c;
          }
        }
        double lo = std::max(0.0, best_c - coord_hi / (scan_points - 1));
        double hi = std::min(coord_hi, best_c + coord_hi / (scan_points - 1));
        double x1 = hi - golden * (hi - lo);
        double x2 = lo + golden * (hi - lo);
        double f1 = g(x1);
        double f2 = g(x2);
        for (int it = 0; it < 44; ++it) {
          if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = g(x2);
          } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = g(x1);
          }
        }
        const double c = 0.5 * (lo + hi);
        const double v = g(c);
        if (v > current) {
          current = v;
          x[i] = c;
          image = image_wo + c * column;
        }
      }
      const double scale = vector_p_norm(x, pv);
      if (scale > 0.0) {
        x /= scale;
        image /= scale;
      }
      if (current - before <= 1e-13 * std::max(1.0, current)) break;
    }
    best = std::max(best, current);
  }

  if (pv == 2.0) {
    const double sigma = Eigen::BDCSVD<Matrix>(K).singularValues()[0];
    if (std::abs(sigma - best) > 1e-7 * std::max(1.0, sigma)) {
      throw std::logic_error("brute_force_norm: coordinate ascent disagrees with dense SVD");
    }
    best = std::max(best, sigma);
  }
  return best;
}

double brute_force_norm(const OperatorMatrix& matrix, LebesgueExponent p) {
  return brute_force_norm(matrix.entries(), p);
}

Vector singular_spectrum(const Matrix& K, Index k, unsigned seed) {
  const Index n = K.rows();
  if (k < 1 || k > n) throw std::invalid_argument("singular_spectrum: requires 1 <= k <= n");
  if (n <= 512) {
    Eigen::BDCSVD<Matrix> svd(K);
    return svd.singularValues().head(k);
  }

  // Block subspace iteration on K^T K with an oversampled basis.
  const Index block = std::min(n, k + 8);
  std::mt19937 rng(seed + 77u);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix Q(n, block);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < block; ++j) Q(i, j) = normal(rng);
  }
  Q = Eigen::HouseholderQR<Matrix>(Q).householderQ() * Matrix::Identity(n, block);

  Vector previous = Vector::Zero(k);
  for (int it = 0; it < 1000; ++it) {
    Matrix Y = K * Q;
    Matrix B = Y.transpose() * Y;  // Rayleigh-Ritz for K^T K in span(Q)
    Eigen::SelfAdjointEigenSolver<Matrix> eig(B);
    Vector ritz = eig.eigenvalues().reverse().head(k).cwiseMax(0.0).cwiseSqrt();
    const double change = (ritz - previous).cwiseAbs().maxCoeff();
    previous = ritz;
    if (it >= 3 && change <= 1e-12 * std::max(1.0, ritz[0])) break;
    Matrix Z = K.transpose() * Y;
    Q = Eigen::HouseholderQR<Matrix>(Z).householderQ() * Matrix::Identity(n, block);
  }
  return previous;
}

Vector singular_spectrum(const OperatorMatrix& matrix, Index k, unsigned seed) {
  return singular_spectrum(matrix.entries(), k, seed);
}

}  // namespace fracops
