#pragma once

#include <Eigen/Dense>
#include <istream>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracops {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Closed time interval [t0, t1], t0 < t1 strictly.
struct Interval {
  Interval(double t0_, double t1_) : t0(t0_), t1(t1_) {
    if (!(t0 < t1)) throw std::invalid_argument("Interval: requires t0 < t1");
  }
  double length() const { return t1 - t0; }
  double t0;
  double t1;
};

// Uniform discretization of [t0, t1] with n >= 2 nodes, node(i) = t0 + i*h.
class UniformGrid {
 public:
  UniformGrid(Interval interval, Index n)
      : interval_(interval), n_(n), h_((interval.t1 - interval.t0) / double(n - 1)) {
    if (n < 2) throw std::invalid_argument("UniformGrid: requires n >= 2");
  }

  const Interval& interval() const { return interval_; }
  Index size() const { return n_; }
  double spacing() const { return h_; }
  double node(Index i) const {
    // Endpoints are exact by construction.
    if (i == n_ - 1) return interval_.t1;
    return interval_.t0 + double(i) * h_;
  }
  Vector nodes() const {
    Vector t(n_);
    for (Index i = 0; i < n_; ++i) t[i] = node(i);
    return t;
  }
  bool operator==(const UniformGrid& other) const {
    return interval_.t0 == other.interval_.t0 && interval_.t1 == other.interval_.t1 &&
           n_ == other.n_;
  }

 private:
  Interval interval_;
  Index n_;
  double h_;
};

UniformGrid make_uniform_grid(Interval interval, Index n);

// Lebesgue exponent p in [1, inf], with the Holder conjugate convention
// 1/p + 1/p* = 1 (1* = inf, inf* = 1).
class LebesgueExponent {
 public:
  LebesgueExponent(double p) : p_(p) {
    if (!(p >= 1.0)) throw std::invalid_argument("LebesgueExponent: requires p >= 1");
  }
  static LebesgueExponent infinity() {
    return LebesgueExponent(std::numeric_limits<double>::infinity());
  }
  double value() const { return p_; }
  bool is_infinite() const { return std::isinf(p_); }
  LebesgueExponent conjugate() const {
    if (is_infinite()) return LebesgueExponent(1.0);
    if (p_ == 1.0) return infinity();
    return LebesgueExponent(p_ / (p_ - 1.0));
  }

 private:
  double p_;
};

// Node values of a function f:[t0,t1] -> R^d together with its grid. Rows are
// nodes, columns the d coordinates. Immutable in spirit: operations return
// new instances. `singular_at_t0` marks families that blow up at the left
// endpoint; the stored t0 row is then a placeholder 0 and that node is
// excluded from sup-norms and given zero quadrature weight.
struct SampledFunction {
  SampledFunction(UniformGrid grid_, Matrix values_, bool singular_at_t0_ = false)
      : grid(grid_), values(std::move(values_)), singular_at_t0(singular_at_t0_) {
    if (values.rows() != grid.size()) {
      throw std::invalid_argument("SampledFunction: row count must match grid");
    }
    if (values.cols() < 1) {
      throw std::invalid_argument("SampledFunction: needs at least one column");
    }
    const Index first = singular_at_t0 ? 1 : 0;
    for (Index i = first; i < values.rows(); ++i) {
      if (!values.row(i).allFinite()) {
        throw std::invalid_argument("SampledFunction: non-finite node value");
      }
    }
  }

  Index dim() const { return values.cols(); }

  UniformGrid grid;
  Matrix values;
  bool singular_at_t0;
};

// Analytic families used throughout: constants, powers (t-t0)^nu with
// nu > -1, monomials (t-t0)^k, and the slowly decaying tail function
//   sigma_p(t) = 0 on [t0, t0+1],  (t-t0)^{-(alpha+1/p)} beyond,
// all multiplied by a fixed direction vector x (default e_1).
struct FamilyDescriptor {
  enum class Kind { constant, power, monomial, sigma_p, table };

  static FamilyDescriptor constant(Index dim = 1);
  static FamilyDescriptor power(double nu, Index dim = 1);
  static FamilyDescriptor monomial(int degree, Index dim = 1);
  static FamilyDescriptor sigma_p(double alpha, double p, Index dim = 1);
  static FamilyDescriptor table(Matrix values);

  Kind kind = Kind::constant;
  double nu = 0.0;
  int degree = 0;
  double alpha = 0.0;
  double p = 2.0;
  Vector direction;  // empty means e_1 of dimension `dim`
  Index dim = 1;
  Matrix table_values;
};

SampledFunction sample_family(const FamilyDescriptor& family, const UniformGrid& grid);

// Discrete L^p norm: composite trapezoid quadrature of |f(t)|_X^p (Euclidean
// norm per node) followed by the p-th root; p = inf takes the node maximum.
double lp_norm(const SampledFunction& f, LebesgueExponent p);

// Restriction to the subgrid of nodes [i0, i1] (same spacing, shorter span).
SampledFunction restrict_to_subgrid(const SampledFunction& f, Index i0, Index i1);

// Reads a table family from CSV with header "t,v1..vd". The t column must be
// strictly increasing and match the grid nodes within 1e-9 * h.
SampledFunction read_table_csv(std::istream& in, const UniformGrid& grid);
SampledFunction read_table_csv_file(const std::string& path, const UniformGrid& grid);

}  // namespace fracops
