#pragma once

#include "core/common.hpp"

#include <memory>
#include <optional>

namespace curveft {

enum class DerivativeMode { Analytic, FiniteDifference };

// Evaluators for one smooth parameterized patch u in R^{d-1} -> chi(u) in R^d.
// `embed` is mandatory and must be evaluable in a small neighborhood of the
// domain box (all catalog charts are global formulas). `jacobian`/`hessian`
// are optional; missing ones fall back to central differences with step
// 1e-5 * axis width.
struct ChartFunctions {
  std::function<Vec(const Vec&)> embed;
  std::function<Mat(const Vec&)> jacobian;                // d x (d-1)
  std::function<std::vector<Mat>(const Vec&)> hessian;    // d matrices, (d-1)x(d-1)
};

class Chart {
 public:
  Chart(int ambient_dim, Box domain, ChartFunctions fns, std::vector<bool> periodic = {},
        std::string label = {});

  int ambient_dim() const { return dim_; }
  int param_dim() const { return dim_ - 1; }
  const Box& domain() const { return domain_; }
  const std::string& label() const { return label_; }
  std::uint64_t id() const { return id_; }

  bool periodic(int axis) const { return periodic_[axis]; }
  bool any_periodic() const;
  // Wraps periodic axes into [lo, hi); other axes untouched.
  Vec wrap(Vec u) const;
  // Parameter distance respecting periodic axes.
  double param_distance(const Vec& a, const Vec& b) const;

  Vec position(const Vec& u) const { return fns_.embed(u); }
  Mat jacobian(const Vec& u) const;
  std::vector<Mat> hessian(const Vec& u) const;

  // Generalized cross product of the jacobian columns; |raw_normal| equals
  // sqrt(det(J^T J)), the area element.
  Vec raw_normal(const Vec& u) const;
  static Vec raw_normal_of(const Mat& jac);
  double area_element(const Vec& u) const { return raw_normal(u).norm(); }

  DerivativeMode derivative_mode() const { return mode_; }
  double fd_step(int axis) const { return 1e-5 * domain_.width(axis); }

  // max_j max_u |d chi / d u_j| over a coarse grid; used by the Nyquist node
  // rule and as the chart's length scale.
  double lipschitz(int axis) const;
  double diameter_estimate() const;

  Mat jacobian_fd(const Vec& u) const;
  std::vector<Mat> hessian_fd(const Vec& u) const;

 private:
  void compute_scales();

  int dim_ = 0;
  Box domain_;
  ChartFunctions fns_;
  std::vector<bool> periodic_;
  std::string label_;
  std::uint64_t id_ = 0;
  DerivativeMode mode_ = DerivativeMode::Analytic;
  std::vector<double> lipschitz_;  // per axis, measured on a coarse grid
  double diameter_ = 0.0;
};

}  // namespace curveft
