#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fracops/fracint.hpp"
#include "fracops/grid.hpp"

namespace fracops {

// Dense lower-triangular realization of J^alpha: row i holds the quadrature
// weights, so (K f)_i approximates J^alpha f(t_i). On a uniform grid the
// discrete L^p weight h^{1/p} cancels between numerator and denominator of
// every Rayleigh ratio, so plain matrix p-norms of K equal the discrete
// operator norms.
class OperatorMatrix {
 public:
  OperatorMatrix(Matrix entries, UniformGrid grid, double alpha, Scheme scheme)
      : entries_(std::move(entries)), grid_(grid), alpha_(alpha), scheme_(scheme) {}

  const Matrix& entries() const { return entries_; }
  const UniformGrid& grid() const { return grid_; }
  double alpha() const { return alpha_; }
  Scheme scheme() const { return scheme_; }
  Index size() const { return entries_.rows(); }

 private:
  Matrix entries_;
  UniformGrid grid_;
  double alpha_;
  Scheme scheme_;
};

OperatorMatrix build_operator_matrix(const UniformGrid& grid, FracOrder alpha,
                                     Scheme scheme = Scheme::trapezoid);

enum class NormMethod { svd, power2, boyd, brute, exact };

std::string to_string(NormMethod method);

struct NormEstimate {
  double value = 0.0;
  double p = 2.0;  // may be infinity
  NormMethod method = NormMethod::exact;
  Index n = 0;
  int iterations = 0;
  double residual = 0.0;
  Vector maximizer;
};

struct EstimateOptions {
  unsigned seed = 0;
  int restarts = 16;
  double tolerance = 1e-12;
  int max_iterations = 5000;
  Index dense_svd_limit = 512;  // p = 2 switches to power iteration above this
  int threads = 1;              // restart-level parallelism cap
  std::vector<Vector> starts;   // explicit start vectors override the seeded ones
};

// Thrown when the power method fails to meet the tolerance within the
// iteration cap; carries the best iterate found.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, NormEstimate best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const NormEstimate& best() const { return best_; }

 private:
  NormEstimate best_;
};

// Matrix p -> p norm:
//   p = inf   max absolute row sum (exact),
//   p = 1    max absolute column sum (exact),
//   p = 2    dense SVD up to dense_svd_limit, otherwise power iteration on
//            K^T K with tolerance on the dual residual,
//   else     nonlinear power method (dual-exponent rescaling of K^T applied
//            to the (p-1)-power signature of Kf), which converges to the
//            global value for entrywise-nonnegative matrices; multi-start.
NormEstimate matrix_p_norm(const Matrix& K, LebesgueExponent p,
                           const EstimateOptions& opts = {});

NormEstimate estimate_norm(const OperatorMatrix& matrix, LebesgueExponent p,
                           const EstimateOptions& opts = {});

// Independent oracle for n <= 8: maximizes |Kf|_p / |f|_p over the
// nonnegative orthant by multi-start coordinate ascent (1024 starts); for
// p = 2 the result is cross-checked against a dense SVD.
double brute_force_norm(const Matrix& K, LebesgueExponent p);
double brute_force_norm(const OperatorMatrix& matrix, LebesgueExponent p);

// Top-k singular values, descending: dense SVD up to n = 512, block
// subspace iteration on K^T K beyond.
Vector singular_spectrum(const Matrix& K, Index k, unsigned seed = 0);
Vector singular_spectrum(const OperatorMatrix& matrix, Index k, unsigned seed = 0);

}  // namespace fracops
