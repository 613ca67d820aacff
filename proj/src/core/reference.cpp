#include "core/reference.hpp"

#include <cmath>

namespace curveft {
namespace reference {

namespace {

double j0_series(double z) {
  // sum_m (-1)^m (z^2/4)^m / (m!)^2
  double term = 1.0, sum = 1.0;
  double x = 0.25 * z * z;
  for (int m = 1; m <= 80; ++m) {
    term *= -x / (static_cast<double>(m) * m);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

double j0_asymptotic(double z) {
  // Hankel expansion: J0(z) = sqrt(2/(pi z)) [P cos(z - pi/4) - Q sin(z - pi/4)].
  const double inv8z = 1.0 / (8.0 * z);
  double p = 1.0, q = 0.0;
  double term = 1.0;
  // a_k = prod (2j-1)^2 with alternating assignment to P (even k) / Q (odd k).
  for (int k = 1; k <= 9; ++k) {
    term *= (2.0 * k - 1.0) * (2.0 * k - 1.0) * inv8z / k;
    if (k % 2 == 1) {
      q += (k % 4 == 1) ? -term : term;
    } else {
      p += (k % 4 == 2) ? -term : term;
    }
  }
  double c = z - 0.25 * kPi;
  return std::sqrt(2.0 / (kPi * z)) * (p * std::cos(c) - q * std::sin(c));
}

}  // namespace

double bessel_j0(double z) {
  z = std::abs(z);
  return z <= 12.0 ? j0_series(z) : j0_asymptotic(z);
}

double wallis(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "wallis: n must be >= 0");
  double even = kPi / 2.0;  // n = 0
  double odd = 1.0;         // n = 1
  if (n == 0) return even;
  if (n == 1) return odd;
  double value = (n % 2 == 0) ? even : odd;
  for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) value *= (k - 1.0) / k;
  return value;
}

namespace {
double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double m, double b,
                     double fa, double fm, double fb, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(a, m, fa, flm, fm);
  double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0) return left + right;
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = simpson(a, b, fa, fm, fb);
  return adaptive_step(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

double unit_sphere_area(int n) {
  // |S^n| = 2 pi^{(n+1)/2} / Gamma((n+1)/2)
  return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

double circle_ft(double r, double q) { return kTwoPi * r * bessel_j0(kTwoPi * r * q); }

double sphere3_ft(double r, double q) {
  if (q == 0.0) return 4.0 * kPi * r * r;
  return 2.0 * r * std::sin(kTwoPi * r * q) / q;
}

Complex hemisphere3_axis_integral(double q) {
  if (q == 0.0) return Complex(1.0, 0.0);
  Complex denom(0.0, kTwoPi * q);
  return (1.0 - std::exp(Complex(0.0, -kTwoPi * q))) / denom;
}

}  // namespace reference
}  // namespace curveft
