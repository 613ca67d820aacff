#include "core/shape.hpp"

#include <cmath>

namespace curveft {

ShapeData shape_data(const Chart& chart, const Vec& u, const Vec& orient_toward) {
  if (orient_toward.size() != chart.ambient_dim() || orient_toward.norm() == 0.0)
    fail(ErrorCode::InvalidArgument, "shape_data: orientation direction must be a nonzero d-vector");

  ShapeData out;
  out.point.chart_index = -1;
  out.point.u = u;
  out.point.position = chart.position(u);

  Mat jac = chart.jacobian(u);
  Vec raw = Chart::raw_normal_of(jac);
  double area = raw.norm();
  out.point.area_element = area;
  if (area < 1e-14)
    fail(ErrorCode::Validation, "shape_data: degenerate jacobian (not an immersion point)");
  Vec n = raw / area;

  double align = n.dot(orient_toward);
  if (std::abs(align) < 1e-12 * orient_toward.norm())
    fail(ErrorCode::InvalidArgument,
         "shape_data: orientation direction is orthogonal to the normal line (ambiguous)");
  if (align < 0) n = -n;
  out.unit_normal = n;

  const int m = chart.param_dim();
  out.first_form = jac.transpose() * jac;
  auto hess = chart.hessian(u);
  Mat ii(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double s = 0.0;
      for (int c = 0; c < chart.ambient_dim(); ++c) s += n[c] * hess[c](a, b);
      ii(a, b) = s;
    }
  ii = 0.5 * (ii + ii.transpose()).eval();
  out.second_form = ii;

  out.gaussian_curvature = ii.determinant() / out.first_form.determinant();

  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(ii, out.first_form);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::Internal, "shape_data: principal curvature eigensolve failed");
  out.principal_curvatures = es.eigenvalues();

  double scale = out.principal_curvatures.cwiseAbs().maxCoeff();
  double eps = std::max(1e-12, 1e-10 * scale);
  int pos = 0, neg = 0;
  for (int i = 0; i < m; ++i) {
    if (out.principal_curvatures[i] > eps)
      ++pos;
    else if (out.principal_curvatures[i] < -eps)
      ++neg;
  }
  out.signature = pos - neg;
  return out;
}

ShapeData shape_data(const Surface& surface, int chart_index, const Vec& u,
                     const Vec& orient_toward) {
  ShapeData out = shape_data(surface.chart(chart_index), u, orient_toward);
  out.point.chart_index = chart_index;
  return out;
}

double curvature_closed_form_revolution(double theta, int d) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "curvature_closed_form_revolution: d must be >= 2");
  double c = std::cos(theta), s = std::sin(theta);
  double a = c + 2.0 * std::cos(2.0 * theta);
  double ap = -s - 4.0 * std::sin(2.0 * theta);
  double numer = 17.0 + 6.0 * c + 4.0 * c * c * c;
  double denom = std::pow(ap * ap + a * a, 0.5 * (d + 1));
  return numer / denom;
}

}  // namespace curveft
