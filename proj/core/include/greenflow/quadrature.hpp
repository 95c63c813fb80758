#pragma once

#include <functional>
#include <stdexcept>

namespace greenflow {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kQuadratureTol = 1e-10;

// Adaptive Simpson bisection to absolute tolerance `tol`.
// `b` may be +infinity; the tail is mapped by s = a - log(1-t), which
// requires the integrand to decay exponentially.
// Throws QuadratureError on non-finite integrand values or when the
// bisection depth cap is exceeded (oscillatory/singular input).
double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double tol = kQuadratureTol);

// Fixed 5-point Gauss-Legendre on [a,b]; used for short smooth segments
// where the error is far below kQuadratureTol.
double gauss5(const std::function<double(double)>& f, double a, double b);

}  // namespace greenflow
