#include "core/chart.hpp"

#include <cmath>

namespace curveft {

Chart::Chart(int ambient_dim, Box domain, ChartFunctions fns, std::vector<bool> periodic,
             std::string label)
    : dim_(ambient_dim),
      domain_(std::move(domain)),
      fns_(std::move(fns)),
      periodic_(std::move(periodic)),
      label_(std::move(label)),
      id_(fresh_object_id()) {
  if (dim_ < 2) fail(ErrorCode::InvalidArgument, "chart: ambient dimension must be >= 2");
  if (domain_.dim() != dim_ - 1)
    fail(ErrorCode::InvalidArgument, "chart: domain must have dimension d-1");
  if (!fns_.embed) fail(ErrorCode::InvalidArgument, "chart: embed function required");
  if (periodic_.empty()) periodic_.assign(dim_ - 1, false);
  if (static_cast<int>(periodic_.size()) != dim_ - 1)
    fail(ErrorCode::InvalidArgument, "chart: periodic flags size mismatch");
  mode_ = (fns_.jacobian && fns_.hessian) ? DerivativeMode::Analytic
                                          : DerivativeMode::FiniteDifference;
  compute_scales();
}

bool Chart::any_periodic() const {
  for (bool p : periodic_)
    if (p) return true;
  return false;
}

Vec Chart::wrap(Vec u) const {
  for (int i = 0; i < param_dim(); ++i) {
    if (!periodic_[i]) continue;
    double w = domain_.width(i);
    double t = std::fmod(u[i] - domain_.lo[i], w);
    if (t < 0) t += w;
    u[i] = domain_.lo[i] + t;
  }
  return u;
}

double Chart::param_distance(const Vec& a, const Vec& b) const {
  double s = 0.0;
  for (int i = 0; i < param_dim(); ++i) {
    double d = std::abs(a[i] - b[i]);
    if (periodic_[i]) {
      double w = domain_.width(i);
      d = std::fmod(d, w);
      d = std::min(d, w - d);
    }
    s += d * d;
  }
  return std::sqrt(s);
}

Mat Chart::jacobian(const Vec& u) const {
  if (fns_.jacobian) return fns_.jacobian(u);
  return jacobian_fd(u);
}

std::vector<Mat> Chart::hessian(const Vec& u) const {
  if (fns_.hessian) return fns_.hessian(u);
  return hessian_fd(u);
}

Mat Chart::jacobian_fd(const Vec& u) const {
  const int m = param_dim();
  Mat jac(dim_, m);
  for (int a = 0; a < m; ++a) {
    double h = fd_step(a);
    Vec up = u, um = u;
    up[a] += h;
    um[a] -= h;
    jac.col(a) = (fns_.embed(up) - fns_.embed(um)) / (2.0 * h);
  }
  return jac;
}

std::vector<Mat> Chart::hessian_fd(const Vec& u) const {
  const int m = param_dim();
  std::vector<Mat> hess(dim_, Mat::Zero(m, m));
  auto jac_at = [&](const Vec& v) { return fns_.jacobian ? fns_.jacobian(v) : jacobian_fd(v); };
  for (int b = 0; b < m; ++b) {
    double h = fd_step(b);
    Vec up = u, um = u;
    up[b] += h;
    um[b] -= h;
    Mat diff = (jac_at(up) - jac_at(um)) / (2.0 * h);  // d/du_b of J
    for (int c = 0; c < dim_; ++c)
      for (int a = 0; a < m; ++a) hess[c](a, b) = diff(c, a);
  }
  // Symmetrize: mixed partials commute for smooth charts.
  for (int c = 0; c < dim_; ++c) hess[c] = 0.5 * (hess[c] + hess[c].transpose()).eval();
  return hess;
}

Vec Chart::raw_normal_of(const Mat& jac) {
  const int d = static_cast<int>(jac.rows());
  Vec n(d);
  Mat minor(d - 1, d - 1);
  for (int i = 0; i < d; ++i) {
    int r = 0;
    for (int row = 0; row < d; ++row) {
      if (row == i) continue;
      minor.row(r++) = jac.row(row);
    }
    double det = minor.determinant();
    n[i] = ((i % 2) == 0) ? det : -det;
  }
  return n;
}

Vec Chart::raw_normal(const Vec& u) const { return raw_normal_of(jacobian(u)); }

void Chart::compute_scales() {
  const int m = param_dim();
  lipschitz_.assign(m, 0.0);
  const int grid = 17;
  Vec u(m), pmin, pmax;
  std::vector<int> idx(m, 0);
  for (;;) {
    for (int a = 0; a < m; ++a)
      u[a] = domain_.lo[a] + (idx[a] + 0.5) / grid * domain_.width(a);
    Mat jac = jacobian(u);
    for (int a = 0; a < m; ++a) lipschitz_[a] = std::max(lipschitz_[a], jac.col(a).norm());
    Vec p = position(u);
    if (pmin.size() == 0) {
      pmin = p;
      pmax = p;
    } else {
      pmin = pmin.cwiseMin(p);
      pmax = pmax.cwiseMax(p);
    }
    int a = 0;
    while (a < m && ++idx[a] == grid) idx[a++] = 0;
    if (a == m) break;
  }
  diameter_ = std::max((pmax - pmin).norm(), 1e-12);
}

double Chart::lipschitz(int axis) const { return lipschitz_[axis]; }

double Chart::diameter_estimate() const { return diameter_; }

}  // namespace curveft
