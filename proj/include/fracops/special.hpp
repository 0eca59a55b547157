#pragma once

#include <stdexcept>

namespace fracops {

// Euler-Mascheroni constant; equals -psi(1).
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Strictly positive real argument. The constructor is the single place the
// x > 0 precondition of the special functions is enforced (NaN rejected too).
class PositiveReal {
 public:
  PositiveReal(double v) : value_(v) {
    if (!(v > 0.0)) throw std::domain_error("PositiveReal: argument must be > 0");
  }
  double value() const { return value_; }

 private:
  double value_;
};

// Euler gamma function on (0, 171.624]; relative error <= 1e-13 on [1e-3, 170].
// Throws std::overflow_error once the result would exceed the double range.
double gamma_fn(PositiveReal x);

// log(gamma(x)) for x > 0; never overflows on the supported range.
double log_gamma(PositiveReal x);

// Digamma function psi(x) = Gamma'(x)/Gamma(x); absolute error <= 1e-12 on
// [1e-3, 1e6].
double digamma_fn(PositiveReal x);

}  // namespace fracops
