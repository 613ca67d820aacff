#pragma once

#include "core/common.hpp"

namespace curveft {
namespace reference {

// Bessel J0 by power series (|z| <= 12) and the Hankel asymptotic expansion
// beyond; independent of the surface quadrature path. Absolute accuracy is
// ~1e-12 over the ranges the checks use.
double bessel_j0(double z);

// int_0^{pi/2} sin^n t dt (Wallis recursion).
double wallis(int n);

// Adaptive Simpson on [a, b] to the requested absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

// Surface area of the unit sphere S^{n} in R^{n+1}.
double unit_sphere_area(int n);

// Closed forms for catalog transforms.
double circle_ft(double r, double q);              // 2 pi r J0(2 pi r q)
double sphere3_ft(double r, double q);             // 4 pi r^2 sinc-type closed form
Complex hemisphere3_axis_integral(double q);       // (1 - e^{-2 pi i q}) / (2 pi i q)

}  // namespace reference
}  // namespace curveft
