#include "core/catalog.hpp"

#include <cmath>

namespace curveft {

namespace {

Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

// Profile functions shared by figure1_curve and revolution_surface.
double prof_a(double t) { return std::cos(t) + 2.0 * std::cos(2.0 * t); }
double prof_ap(double t) { return -std::sin(t) - 4.0 * std::sin(2.0 * t); }
double prof_app(double t) { return -std::cos(t) - 8.0 * std::cos(2.0 * t); }
double prof_b(double t) { return std::sin(t) + std::sin(2.0 * t); }
double prof_bp(double t) { return std::cos(t) + 2.0 * std::cos(2.0 * t); }
double prof_bpp(double t) { return -std::sin(t) - 4.0 * std::sin(2.0 * t); }

Chart circle_chart(double r) {
  ChartFunctions fns;
  fns.embed = [r](const Vec& u) { return Vec(vec2(r * std::cos(u[0]), r * std::sin(u[0]))); };
  fns.jacobian = [r](const Vec& u) {
    Mat j(2, 1);
    j << -r * std::sin(u[0]), r * std::cos(u[0]);
    return j;
  };
  fns.hessian = [r](const Vec& u) {
    std::vector<Mat> h(2, Mat(1, 1));
    h[0](0, 0) = -r * std::cos(u[0]);
    h[1](0, 0) = -r * std::sin(u[0]);
    return h;
  };
  Box dom(vec2(0.0, 0.0).head(1), vec2(kTwoPi, 0.0).head(1));
  return Chart(2, dom, std::move(fns), {true}, "circle");
}

// Gnomonic face chart of the radius-r sphere in R^d: the d-1 parameters fill
// the coordinates other than `axis` in increasing order, coordinate `axis` is
// held at `sign`, and the affine point is projected onto the sphere.
Chart sphere_face_chart(int d, int axis, int sign, double r, double vlast_lo) {
  const int m = d - 1;
  std::vector<int> slot(m);
  {
    int p = 0;
    for (int c = 0; c < d; ++c)
      if (c != axis) slot[p++] = c;
  }
  auto make_g = [=](const Vec& u) {
    Vec g = Vec::Zero(d);
    g[axis] = static_cast<double>(sign);
    for (int a = 0; a < m; ++a) g[slot[a]] = u[a];
    return g;
  };
  ChartFunctions fns;
  fns.embed = [=](const Vec& u) {
    Vec g = make_g(u);
    return Vec(r / std::sqrt(1.0 + u.squaredNorm()) * g);
  };
  fns.jacobian = [=](const Vec& u) {
    Vec g = make_g(u);
    double n2 = 1.0 + u.squaredNorm();
    double n1 = std::sqrt(n2), n3 = n1 * n2;
    Mat j = Mat::Zero(d, m);
    for (int a = 0; a < m; ++a) {
      j.col(a) = -r * u[a] / n3 * g;
      j(slot[a], a) += r / n1;
    }
    return j;
  };
  fns.hessian = [=](const Vec& u) {
    Vec g = make_g(u);
    double n2 = 1.0 + u.squaredNorm();
    double n3 = n2 * std::sqrt(n2), n5 = n3 * n2;
    std::vector<Mat> h(d, Mat::Zero(m, m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        Vec second = 3.0 * r * g * u[a] * u[b] / n5;
        if (a == b) second -= r * g / n3;
        for (int c = 0; c < d; ++c) h[c](a, b) += second[c];
        h[slot[a]](a, b) += -r * u[b] / n3;
        h[slot[b]](a, b) += -r * u[a] / n3;
      }
    return h;
  };
  Vec lo = Vec::Constant(m, -1.0), hi = Vec::Constant(m, 1.0);
  if (vlast_lo > -1.0) lo[m - 1] = vlast_lo;
  std::string label = "sphere_face_" + std::string(sign > 0 ? "+" : "-") + std::to_string(axis);
  return Chart(d, Box(lo, hi), std::move(fns), {}, label);
}

Chart figure1_chart() {
  ChartFunctions fns;
  fns.embed = [](const Vec& u) { return Vec(vec2(prof_a(u[0]), prof_b(u[0]))); };
  fns.jacobian = [](const Vec& u) {
    Mat j(2, 1);
    j << prof_ap(u[0]), prof_bp(u[0]);
    return j;
  };
  fns.hessian = [](const Vec& u) {
    std::vector<Mat> h(2, Mat(1, 1));
    h[0](0, 0) = prof_app(u[0]);
    h[1](0, 0) = prof_bpp(u[0]);
    return h;
  };
  Box dom(Vec::Zero(1), Vec::Constant(1, kTwoPi));
  return Chart(2, dom, std::move(fns), {true}, "figure1");
}

Chart revolution3_chart() {
  ChartFunctions fns;
  fns.embed = [](const Vec& u) {
    double t = u[0], p = u[1];
    Vec x(3);
    x << prof_a(t) * std::cos(p), prof_a(t) * std::sin(p), prof_b(t);
    return x;
  };
  fns.jacobian = [](const Vec& u) {
    double t = u[0], p = u[1];
    double a = prof_a(t), ap = prof_ap(t), bp = prof_bp(t);
    Mat j(3, 2);
    j << ap * std::cos(p), -a * std::sin(p), ap * std::sin(p), a * std::cos(p), bp, 0.0;
    return j;
  };
  fns.hessian = [](const Vec& u) {
    double t = u[0], p = u[1];
    double a = prof_a(t), ap = prof_ap(t), app = prof_app(t), bpp = prof_bpp(t);
    double cp = std::cos(p), sp = std::sin(p);
    std::vector<Mat> h(3, Mat::Zero(2, 2));
    h[0] << app * cp, -ap * sp, -ap * sp, -a * cp;
    h[1] << app * sp, ap * cp, ap * cp, -a * sp;
    h[2](0, 0) = bpp;
    return h;
  };
  Box dom(Vec::Zero(2), Vec::Constant(2, kTwoPi));
  return Chart(3, dom, std::move(fns), {true, true}, "revolution3");
}

Chart revolution4_chart() {
  // chi(t, al, be) = (a(t) w(al, be), b(t)), w the unit 2-sphere.
  auto omega = [](double al, double be, Vec* w, Vec* wa, Vec* wb, Vec* waa, Vec* wab, Vec* wbb) {
    double sa = std::sin(al), ca = std::cos(al), sb = std::sin(be), cb = std::cos(be);
    *w = Vec(3);
    *w << sa * cb, sa * sb, ca;
    if (!wa) return;
    *wa = Vec(3);
    *wa << ca * cb, ca * sb, -sa;
    *wb = Vec(3);
    *wb << -sa * sb, sa * cb, 0.0;
    *waa = -(*w);
    *wab = Vec(3);
    *wab << -ca * sb, ca * cb, 0.0;
    *wbb = Vec(3);
    *wbb << -sa * cb, -sa * sb, 0.0;
  };
  ChartFunctions fns;
  fns.embed = [omega](const Vec& u) {
    Vec w;
    omega(u[1], u[2], &w, nullptr, nullptr, nullptr, nullptr, nullptr);
    Vec x(4);
    x.head(3) = prof_a(u[0]) * w;
    x[3] = prof_b(u[0]);
    return x;
  };
  fns.jacobian = [omega](const Vec& u) {
    Vec w, wa, wb, waa, wab, wbb;
    omega(u[1], u[2], &w, &wa, &wb, &waa, &wab, &wbb);
    double a = prof_a(u[0]), ap = prof_ap(u[0]), bp = prof_bp(u[0]);
    Mat j = Mat::Zero(4, 3);
    j.col(0).head(3) = ap * w;
    j(3, 0) = bp;
    j.col(1).head(3) = a * wa;
    j.col(2).head(3) = a * wb;
    return j;
  };
  fns.hessian = [omega](const Vec& u) {
    Vec w, wa, wb, waa, wab, wbb;
    omega(u[1], u[2], &w, &wa, &wb, &waa, &wab, &wbb);
    double a = prof_a(u[0]), ap = prof_ap(u[0]), app = prof_app(u[0]), bpp = prof_bpp(u[0]);
    std::vector<Mat> h(4, Mat::Zero(3, 3));
    for (int c = 0; c < 3; ++c) {
      h[c](0, 0) = app * w[c];
      h[c](0, 1) = h[c](1, 0) = ap * wa[c];
      h[c](0, 2) = h[c](2, 0) = ap * wb[c];
      h[c](1, 1) = a * waa[c];
      h[c](1, 2) = h[c](2, 1) = a * wab[c];
      h[c](2, 2) = a * wbb[c];
    }
    h[3](0, 0) = bpp;
    return h;
  };
  Vec lo(3), hi(3);
  lo << 0.0, 0.0, 0.0;
  hi << kTwoPi, kPi, kTwoPi;
  return Chart(4, Box(lo, hi), std::move(fns), {true, false, true}, "revolution4");
}

Chart graph_chart(int d, const HeightSpec& height, const Box& base, const std::string& label) {
  const int m = d - 1;
  if (base.dim() != m) fail(ErrorCode::InvalidArgument, "cap_graph: base box must have dim d-1");

  std::function<double(const Vec&)> h_val;
  std::function<Vec(const Vec&)> h_grad;
  std::function<Mat(const Vec&)> h_hess;
  if (const auto* sc = std::get_if<SphereCapHeight>(&height)) {
    double r = sc->radius;
    if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "cap_graph: radius must be positive");
    double corner = std::max(base.lo.norm(), base.hi.norm());
    if (corner >= 0.95 * r)
      fail(ErrorCode::InvalidArgument, "cap_graph: base box too large for the sphere height");
    h_val = [r](const Vec& x) { return std::sqrt(r * r - x.squaredNorm()); };
    h_grad = [r](const Vec& x) {
      double h = std::sqrt(r * r - x.squaredNorm());
      return Vec(-x / h);
    };
    h_hess = [r](const Vec& x) {
      double h = std::sqrt(r * r - x.squaredNorm());
      Mat hh = -(Mat::Identity(x.size(), x.size()) / h) - x * x.transpose() / (h * h * h);
      return hh;
    };
  } else {
    const auto& par = std::get<ParaboloidHeight>(height);
    Vec k = par.curvatures;
    if (k.size() != m) fail(ErrorCode::InvalidArgument, "cap_graph: need d-1 vertex curvatures");
    for (int i = 0; i < m; ++i)
      if (k[i] == 0.0) fail(ErrorCode::InvalidArgument, "cap_graph: vertex curvatures must be nonzero");
    h_val = [k](const Vec& x) { return 0.5 * x.dot(k.asDiagonal() * x); };
    h_grad = [k](const Vec& x) { return Vec(k.asDiagonal() * x); };
    h_hess = [k, m](const Vec&) { return Mat(k.asDiagonal()); };
  }

  ChartFunctions fns;
  fns.embed = [d, m, h_val](const Vec& u) {
    Vec x(d);
    x.head(m) = u;
    x[m] = h_val(u);
    return x;
  };
  fns.jacobian = [d, m, h_grad](const Vec& u) {
    Mat j = Mat::Zero(d, m);
    j.topRows(m) = Mat::Identity(m, m);
    j.row(m) = h_grad(u).transpose();
    return j;
  };
  fns.hessian = [d, m, h_hess](const Vec& u) {
    std::vector<Mat> h(d, Mat::Zero(m, m));
    h[m] = h_hess(u);
    return h;
  };
  return Chart(d, base, std::move(fns), {}, label);
}

Chart polar_cap_chart3(double r, double half_angle) {
  // (rho, phi): colatitude, azimuth. Degenerate only at rho = 0, which is
  // measure zero and never a sample node.
  ChartFunctions fns;
  fns.embed = [r](const Vec& u) {
    double rho = u[0], phi = u[1];
    Vec x(3);
    x << r * std::sin(rho) * std::cos(phi), r * std::sin(rho) * std::sin(phi), r * std::cos(rho);
    return x;
  };
  fns.jacobian = [r](const Vec& u) {
    double rho = u[0], phi = u[1];
    double sr = std::sin(rho), cr = std::cos(rho), sp = std::sin(phi), cp = std::cos(phi);
    Mat j(3, 2);
    j << r * cr * cp, -r * sr * sp, r * cr * sp, r * sr * cp, -r * sr, 0.0;
    return j;
  };
  fns.hessian = [r](const Vec& u) {
    double rho = u[0], phi = u[1];
    double sr = std::sin(rho), cr = std::cos(rho), sp = std::sin(phi), cp = std::cos(phi);
    std::vector<Mat> h(3, Mat::Zero(2, 2));
    h[0] << -r * sr * cp, -r * cr * sp, -r * cr * sp, -r * sr * cp;
    h[1] << -r * sr * sp, r * cr * cp, r * cr * cp, -r * sr * sp;
    h[2](0, 0) = -r * cr;
    return h;
  };
  Vec lo(2), hi(2);
  lo << 0.0, 0.0;
  hi << half_angle, kTwoPi;
  return Chart(3, Box(lo, hi), std::move(fns), {false, true}, "polar_cap");
}

Chart arc_chart(double r, double lo_angle, double hi_angle, const std::string& label) {
  // Arc about the +x2 axis: chi(t) = r (sin t, cos t).
  ChartFunctions fns;
  fns.embed = [r](const Vec& u) { return Vec(vec2(r * std::sin(u[0]), r * std::cos(u[0]))); };
  fns.jacobian = [r](const Vec& u) {
    Mat j(2, 1);
    j << r * std::cos(u[0]), -r * std::sin(u[0]);
    return j;
  };
  fns.hessian = [r](const Vec& u) {
    std::vector<Mat> h(2, Mat(1, 1));
    h[0](0, 0) = -r * std::sin(u[0]);
    h[1](0, 0) = -r * std::cos(u[0]);
    return h;
  };
  Box dom(Vec::Constant(1, lo_angle), Vec::Constant(1, hi_angle));
  return Chart(2, dom, std::move(fns), {false}, label);
}

}  // namespace

Surface circle(double r) {
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "circle: radius must be positive");
  std::vector<Chart> charts;
  charts.push_back(circle_chart(r));
  return Surface(std::move(charts), OverlapPolicy::Disjoint, {}, "circle", /*closed=*/true);
}

Surface circle_double(double r) {
  std::vector<Chart> charts;
  charts.push_back(circle_chart(r));
  charts.push_back(circle_chart(r));
  return Surface(std::move(charts), OverlapPolicy::Declared, {0, 0}, "circle_double",
                 /*closed=*/true);
}

Surface sphere(int d, double r) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "sphere: d must be >= 2");
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "sphere: radius must be positive");
  if (d == 2) return circle(r);
  std::vector<Chart> charts;
  for (int axis = 0; axis < d; ++axis)
    for (int sign : {+1, -1}) charts.push_back(sphere_face_chart(d, axis, sign, r, -1.0));
  return Surface(std::move(charts), OverlapPolicy::Disjoint, {}, "sphere" + std::to_string(d),
                 /*closed=*/true);
}

HemispherePair hemisphere_pair(int d, double r) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "hemisphere: d must be >= 2");
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "hemisphere: radius must be positive");
  if (d == 2) {
    std::vector<Chart> half;
    half.push_back(arc_chart(r, -0.5 * kPi, 0.5 * kPi, "half_circle"));
    return HemispherePair{circle(r),
                          Surface(std::move(half), OverlapPolicy::Disjoint, {}, "half_circle")};
  }
  std::vector<Chart> half;
  half.push_back(sphere_face_chart(d, d - 1, +1, r, -1.0));  // polar face, fully in x_d >= 0
  for (int axis = 0; axis + 1 < d; ++axis)
    for (int sign : {+1, -1}) half.push_back(sphere_face_chart(d, axis, sign, r, 0.0));
  return HemispherePair{sphere(d, r), Surface(std::move(half), OverlapPolicy::Disjoint, {},
                                              "hemisphere" + std::to_string(d))};
}

Surface cap_graph(int d, const HeightSpec& height, const Box& base) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "cap_graph: d must be >= 2");
  std::vector<Chart> charts;
  charts.push_back(graph_chart(d, height, base, "cap_graph"));
  return Surface(std::move(charts), OverlapPolicy::Disjoint, {}, "cap_graph");
}

Surface spherical_cap(int d, double r, double half_angle) {
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "spherical_cap: radius must be positive");
  if (!(half_angle > 0.0) || half_angle >= kPi)
    fail(ErrorCode::InvalidArgument, "spherical_cap: half_angle must lie in (0, pi)");
  std::vector<Chart> charts;
  if (d == 2) {
    charts.push_back(arc_chart(r, -half_angle, half_angle, "arc_cap"));
  } else if (d == 3) {
    charts.push_back(polar_cap_chart3(r, half_angle));
  } else {
    fail(ErrorCode::InvalidArgument, "spherical_cap: only d = 2, 3 supported");
  }
  return Surface(std::move(charts), OverlapPolicy::Disjoint, {}, "spherical_cap");
}

Surface figure1_curve() {
  std::vector<Chart> charts;
  charts.push_back(figure1_chart());
  return Surface(std::move(charts), OverlapPolicy::Disjoint, {}, "figure1", /*closed=*/true);
}

Surface revolution_surface(int d) {
  if (d == 2) {
    Surface s = figure1_curve();
    return s;
  }
  std::vector<Chart> charts;
  if (d == 3)
    charts.push_back(revolution3_chart());
  else if (d == 4)
    charts.push_back(revolution4_chart());
  else
    fail(ErrorCode::InvalidArgument, "revolution_surface: only d = 2, 3, 4 supported");
  return Surface(std::move(charts), OverlapPolicy::Disjoint, {},
                 "revolution" + std::to_string(d), /*closed=*/true);
}

Surface flat_segment(double length) {
  if (!(length > 0.0)) fail(ErrorCode::InvalidArgument, "flat_segment: length must be positive");
  ChartFunctions fns;
  fns.embed = [](const Vec& u) { return Vec(vec2(u[0], 0.0)); };
  fns.jacobian = [](const Vec&) {
    Mat j(2, 1);
    j << 1.0, 0.0;
    return j;
  };
  fns.hessian = [](const Vec&) { return std::vector<Mat>(2, Mat::Zero(1, 1)); };
  Box dom(Vec::Constant(1, -0.5 * length), Vec::Constant(1, 0.5 * length));
  std::vector<Chart> charts;
  charts.push_back(Chart(2, dom, std::move(fns), {}, "flat_segment"));
  return Surface(std::move(charts), OverlapPolicy::Disjoint, {}, "flat_segment");
}

Window bump_window(const Surface& surface, int chart_index, const Box& support, double floor,
                   double amplitude) {
  if (chart_index < 0 || chart_index >= surface.chart_count())
    fail(ErrorCode::InvalidArgument, "bump_window: chart index out of range");
  const Box& dom = surface.chart(chart_index).domain();
  if (support.dim() != dom.dim())
    fail(ErrorCode::InvalidArgument, "bump_window: support dimension mismatch");
  for (int a = 0; a < dom.dim(); ++a)
    if (support.lo[a] < dom.lo[a] - 1e-12 || support.hi[a] > dom.hi[a] + 1e-12)
      fail(ErrorCode::InvalidArgument, "bump_window: support must lie inside the chart domain");
  return Window::bump(chart_index, support, floor, amplitude);
}

Window window_one(const Surface& surface, int chart_index) {
  if (chart_index < 0 || chart_index >= surface.chart_count())
    fail(ErrorCode::InvalidArgument, "window_one: chart index out of range");
  return Window::one(chart_index, surface.chart(chart_index).domain());
}

}  // namespace curveft
