#pragma once

#include "core/surface.hpp"

namespace curveft {

// Pointwise second-order data. The unit normal is oriented so that
// n . orient_toward >= 0; the second fundamental form is taken with respect to
// that normal, so for a direction query e the graph height function toward +e
// has Hessian congruent to II (same signature, det ratio = K).
//
// Sign convention: on the unit sphere with the outward normal the principal
// curvatures are -1 and K = det(I^-1 II) = (-1)^(d-1); with the inward normal
// they are +1. |K| is orientation-independent.
struct ShapeData {
  SurfacePoint point;
  Vec unit_normal;
  Mat first_form;   // I = J^T J
  Mat second_form;  // II_ab = n . d2chi/du_a du_b
  Vec principal_curvatures;  // eigenvalues of I^-1 II, ascending
  double gaussian_curvature = 0.0;  // det(II)/det(I)
  int signature = 0;  // #positive - #negative principal curvatures
};

ShapeData shape_data(const Chart& chart, const Vec& u, const Vec& orient_toward);
ShapeData shape_data(const Surface& surface, int chart_index, const Vec& u,
                     const Vec& orient_toward);

// Gaussian curvature of the revolution hypersurface built from the
// figure-eight-like profile (a, b) = (cos t + 2 cos 2t, sin t + sin 2t):
//   (17 + 6 cos t + 4 cos^3 t) / (a'^2 + a^2)^{(d+1)/2},
// the d = 2 case being the plane-curve curvature itself.
double curvature_closed_form_revolution(double theta, int d);

}  // namespace curveft
