#include "core/surface.hpp"

#include "core/shape.hpp"

#include <cmath>

namespace curveft {

// --- Window ------------------------------------------------------------------

namespace {
// 1-D bump profile on (-1, 1), value 1 at the center.
double bump1(double t) {
  double s = 1.0 - t * t;
  if (s <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / s);
}

double bump1_logderiv(double t) {  // g'(t)/g(t)
  double s = 1.0 - t * t;
  return -2.0 * t / (s * s);
}
}  // namespace

Window Window::one(int chart_index, Box domain) {
  Window w;
  w.chart_index_ = chart_index;
  w.support_ = std::move(domain);
  w.floor_ = 1.0;
  w.constant_one_ = true;
  w.id_ = fresh_object_id();
  return w;
}

Window Window::bump(int chart_index, Box support, double floor, double amplitude) {
  if (!(floor > 0.0) || floor > 1.0)
    fail(ErrorCode::InvalidArgument, "window floor must lie in (0, 1]");
  if (!(amplitude > 0.0) || amplitude > 1.0)
    fail(ErrorCode::InvalidArgument, "window amplitude must lie in (0, 1]");
  if (floor > amplitude)
    fail(ErrorCode::InvalidArgument, "window floor above the amplitude empties the superlevel set");
  Window w;
  w.chart_index_ = chart_index;
  w.support_ = std::move(support);
  w.floor_ = floor;
  w.amplitude_ = amplitude;
  w.constant_one_ = false;
  w.id_ = fresh_object_id();
  return w;
}

double Window::value(const Vec& u) const {
  if (constant_one_) return support_.contains(u) ? 1.0 : 0.0;
  double v = amplitude_;
  for (int a = 0; a < support_.dim(); ++a) {
    double c = 0.5 * (support_.lo[a] + support_.hi[a]);
    double hw = 0.5 * support_.width(a);
    double t = (u[a] - c) / hw;
    if (std::abs(t) >= 1.0) return 0.0;
    v *= bump1(t);
  }
  return v;
}

Vec Window::gradient(const Vec& u) const {
  Vec g = Vec::Zero(support_.dim());
  if (constant_one_) return g;
  double v = value(u);
  if (v == 0.0) return g;
  for (int a = 0; a < support_.dim(); ++a) {
    double c = 0.5 * (support_.lo[a] + support_.hi[a]);
    double hw = 0.5 * support_.width(a);
    double t = (u[a] - c) / hw;
    g[a] = v * bump1_logderiv(t) / hw;
  }
  return g;
}

Box Window::superlevel_bounding_box(double level) const {
  if (constant_one_ || level <= 0.0) return support_;
  // Per-axis: product >= level implies each scaled factor >= level.
  double ln = std::log(std::min(1.0, level / amplitude_));
  double t2 = 1.0 - 1.0 / (1.0 - ln);
  double t = t2 > 0.0 ? std::sqrt(t2) : 0.0;
  Vec lo = support_.lo, hi = support_.hi;
  for (int a = 0; a < support_.dim(); ++a) {
    double c = 0.5 * (lo[a] + hi[a]);
    double hw = 0.5 * (hi[a] - lo[a]);
    lo[a] = c - t * hw;
    hi[a] = c + t * hw;
    if (!(lo[a] < hi[a])) {
      lo[a] = c - 1e-12;
      hi[a] = c + 1e-12;
    }
  }
  return Box(lo, hi);
}

// --- Surface -----------------------------------------------------------------

Surface::Surface(std::vector<Chart> charts, OverlapPolicy policy, std::vector<int> overlap_groups,
                 std::string name, bool closed)
    : charts_(std::move(charts)),
      policy_(policy),
      groups_(std::move(overlap_groups)),
      name_(std::move(name)),
      closed_(closed),
      id_(fresh_object_id()) {
  if (charts_.empty()) fail(ErrorCode::InvalidArgument, "surface: needs at least one chart");
  dim_ = charts_.front().ambient_dim();
  for (const auto& c : charts_)
    if (c.ambient_dim() != dim_)
      fail(ErrorCode::InvalidArgument, "surface: charts must share the ambient dimension");
  if (policy_ == OverlapPolicy::Declared) {
    if (groups_.size() != charts_.size())
      fail(ErrorCode::InvalidArgument, "surface: declared policy needs one group id per chart");
    int gmax = 0;
    for (int g : groups_) gmax = std::max(gmax, g);
    group_size_.assign(gmax + 1, 0);
    for (int g : groups_) group_size_[g] += 1;
  }
}

int Surface::multiplicity(int chart_index) const {
  if (policy_ == OverlapPolicy::Disjoint) return 1;
  return group_size_[groups_.at(chart_index)];
}

double Surface::diameter_estimate() const {
  double d = 0.0;
  for (const auto& c : charts_) d = std::max(d, c.diameter_estimate());
  return d;
}

SurfacePoint make_surface_point(const Surface& surface, int chart_index, const Vec& u) {
  const Chart& chart = surface.chart(chart_index);
  SurfacePoint p;
  p.chart_index = chart_index;
  p.u = chart.wrap(u);
  p.position = chart.position(p.u);
  p.area_element = chart.area_element(p.u);
  return p;
}

double surface_measure_weight(const Surface& surface, const SurfacePoint& point) {
  const Chart& chart = surface.chart(point.chart_index);
  if (!chart.domain().contains(point.u, 1e-12))
    fail(ErrorCode::InvalidArgument, "surface_measure_weight: point outside chart domain");
  return point.area_element * surface.multiplicity_weight(point.chart_index);
}

// --- SubsurfaceSelection / Region ---------------------------------------------

SubsurfaceSelection SubsurfaceSelection::whole_chart(const Surface& surface, int chart_index,
                                                     double margin) {
  SubsurfaceSelection sel;
  sel.margin = margin;
  sel.boxes.resize(surface.chart_count());
  const Chart& chart = surface.chart(chart_index);
  Vec lo = chart.domain().lo, hi = chart.domain().hi;
  for (int a = 0; a < chart.param_dim(); ++a) {
    if (chart.periodic(a)) continue;
    lo[a] += margin;
    hi[a] -= margin;
  }
  sel.boxes[chart_index].push_back(Box(lo, hi));
  return sel;
}

void SubsurfaceSelection::validate(const Surface& surface) const {
  if (static_cast<int>(boxes.size()) != surface.chart_count())
    fail(ErrorCode::InvalidArgument, "selection: one box list per chart required");
  if (!(margin > 0.0)) fail(ErrorCode::InvalidArgument, "selection: margin must be positive");
  for (int i = 0; i < surface.chart_count(); ++i) {
    const Chart& chart = surface.chart(i);
    for (const Box& b : boxes[i]) {
      for (int a = 0; a < chart.param_dim(); ++a) {
        if (chart.periodic(a)) continue;
        if (b.lo[a] < chart.domain().lo[a] + margin - 1e-12 ||
            b.hi[a] > chart.domain().hi[a] - margin + 1e-12)
          fail(ErrorCode::Validation, "selection: box not compactly contained in chart " +
                                          std::to_string(i));
      }
    }
  }
}

Region Region::whole() { return Region{}; }

Region Region::selection(SubsurfaceSelection sel) {
  Region r;
  r.kind_ = Kind::Selection;
  r.selection_ = std::move(sel);
  return r;
}

Region Region::window_superlevel(const Window* window) {
  Region r;
  r.kind_ = Kind::WindowSuperlevel;
  r.window_ = window;
  return r;
}

Region Region::window_support(const Window* window) {
  Region r;
  r.kind_ = Kind::WindowSupport;
  r.window_ = window;
  return r;
}

bool Region::contains(const Surface& surface, int chart_index, const Vec& u) const {
  return boundary_margin(surface, chart_index, u) > 0.0;
}

double Region::boundary_margin(const Surface& surface, int chart_index, const Vec& u) const {
  switch (kind_) {
    case Kind::Whole: {
      const Chart& chart = surface.chart(chart_index);
      if (surface.closed()) return 1.0;
      double m = std::numeric_limits<double>::infinity();
      for (int a = 0; a < chart.param_dim(); ++a) {
        if (chart.periodic(a)) continue;
        m = std::min({m, u[a] - chart.domain().lo[a], chart.domain().hi[a] - u[a]});
      }
      return std::isfinite(m) ? m / chart.domain().max_width() : 1.0;
    }
    case Kind::Selection: {
      double best = -std::numeric_limits<double>::infinity();
      for (const Box& b : selection_.boxes[chart_index])
        best = std::max(best, b.interior_margin(u) / b.max_width());
      return best;
    }
    case Kind::WindowSuperlevel: {
      if (chart_index != window_->chart_index()) return -1.0;
      return window_->value(u) - window_->floor();
    }
    case Kind::WindowSupport: {
      if (chart_index != window_->chart_index()) return -1.0;
      return window_->value(u);
    }
  }
  return -1.0;
}

// --- validation ---------------------------------------------------------------

ChartValidation validate_chart(const Chart& chart, int samples_per_axis,
                               const ValidationThresholds& thresholds) {
  if (samples_per_axis < 2)
    fail(ErrorCode::InvalidArgument, "validate_chart: samples_per_axis must be >= 2");
  ChartValidation out;
  out.min_singular_value = std::numeric_limits<double>::infinity();
  out.min_abs_curvature = std::numeric_limits<double>::infinity();
  out.max_abs_curvature = 0.0;

  const int m = chart.param_dim();
  std::vector<int> idx(m, 0);
  Vec u(m);
  for (;;) {
    for (int a = 0; a < m; ++a)
      u[a] = chart.domain().lo[a] + (idx[a] + 0.5) / samples_per_axis * chart.domain().width(a);

    Mat jac = chart.jacobian(u);
    Eigen::JacobiSVD<Mat> svd(jac);
    double smin = svd.singularValues().minCoeff();
    if (smin < out.min_singular_value) {
      out.min_singular_value = smin;
      out.worst_immersion_point = u;
    }
    if (smin > thresholds.min_singular_value) {
      double k = std::abs(shape_data(chart, u, chart.raw_normal(u)).gaussian_curvature);
      if (k < out.min_abs_curvature) {
        out.min_abs_curvature = k;
        out.worst_curvature_point = u;
      }
      out.max_abs_curvature = std::max(out.max_abs_curvature, k);
    } else {
      out.min_abs_curvature = 0.0;
      out.worst_curvature_point = u;
    }

    int a = 0;
    while (a < m && ++idx[a] == samples_per_axis) idx[a++] = 0;
    if (a == m) break;
  }

  if (out.min_singular_value <= thresholds.min_singular_value) {
    out.pass = false;
    out.message = "immersion check failed: jacobian nearly rank-deficient";
  } else if (out.min_abs_curvature <= thresholds.min_abs_curvature) {
    out.pass = false;
    out.message = "curvature check failed: |K| below threshold";
  } else {
    out.pass = true;
    out.message = "ok";
  }
  return out;
}

}  // namespace curveft
