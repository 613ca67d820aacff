#include "core/stationary.hpp"

#include <algorithm>
#include <cmath>

namespace curveft {

namespace {

struct SeedTable {
  struct Seed {
    int chart = 0;
    Vec u;
    Vec unit_normal;  // zero when the jacobian is degenerate at the seed
    bool degenerate = false;
  };
  std::vector<Seed> seeds;
  std::vector<int> chart_offset;  // seeds laid out grid-major per chart
  std::vector<std::vector<int>> chart_grid;  // per-axis seed counts
};

SeedTable build_seed_table(const Surface& surface, int per_axis) {
  SeedTable table;
  table.chart_offset.assign(surface.chart_count() + 1, 0);
  for (int i = 0; i < surface.chart_count(); ++i) {
    const Chart& chart = surface.chart(i);
    const int m = chart.param_dim();
    std::vector<int> grid(m, per_axis);
    table.chart_grid.push_back(grid);
    std::vector<int> idx(m, 0);
    Vec u(m);
    for (;;) {
      for (int a = 0; a < m; ++a)
        u[a] = chart.domain().lo[a] + (idx[a] + 0.5) / grid[a] * chart.domain().width(a);
      SeedTable::Seed s;
      s.chart = i;
      s.u = u;
      Vec raw = chart.raw_normal(u);
      double norm = raw.norm();
      if (norm < 1e-12 * std::pow(chart.diameter_estimate(), m)) {
        s.degenerate = true;
        s.unit_normal = Vec::Zero(chart.ambient_dim());
      } else {
        s.unit_normal = raw / norm;
      }
      table.seeds.push_back(std::move(s));
      int a = 0;
      while (a < m && ++idx[a] == grid[a]) idx[a++] = 0;
      if (a == m) break;
    }
    table.chart_offset[i + 1] = static_cast<int>(table.seeds.size());
  }
  return table;
}

// Newton iteration on F(u) = J(u)^T e with wrap/clamp handling. Returns true
// on convergence; *at_chart_boundary marks roots pinned to a non-periodic wall.
bool newton_tangency(const Chart& chart, const Vec& e, Vec u, Vec* out,
                     bool* at_chart_boundary, const StationaryOptions& opts) {
  const int m = chart.param_dim();
  double jac_scale = 0.0;
  for (int a = 0; a < m; ++a) jac_scale = std::max(jac_scale, chart.lipschitz(a));
  const double f_tol = 1e-12 * std::max(jac_scale, 1e-8);

  auto clamp_wrap = [&](Vec v) {
    v = chart.wrap(std::move(v));
    for (int a = 0; a < m; ++a) {
      if (chart.periodic(a)) continue;
      v[a] = std::min(std::max(v[a], chart.domain().lo[a]), chart.domain().hi[a]);
    }
    return v;
  };

  Vec f = chart.jacobian(u).transpose() * e;
  double fn = f.norm();
  for (int it = 0; it < opts.max_newton_iters; ++it) {
    if (fn <= f_tol) break;
    auto hess = chart.hessian(u);
    Mat df(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        double s = 0.0;
        for (int c = 0; c < chart.ambient_dim(); ++c) s += e[c] * hess[c](a, b);
        df(a, b) = s;
      }
    Eigen::PartialPivLU<Mat> lu(df);
    Vec step = lu.solve(-f);
    if (!step.allFinite()) return false;
    double max_step = 0.25 * chart.domain().max_width();
    if (step.norm() > max_step) step *= max_step / step.norm();

    double s = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 30; ++bt) {
      Vec u_next = clamp_wrap(u + s * step);
      Vec f_next = chart.jacobian(u_next).transpose() * e;
      double fn_next = f_next.norm();
      if (fn_next < (1.0 - 0.25 * s) * fn || fn_next <= f_tol) {
        u = u_next;
        f = f_next;
        fn = fn_next;
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) break;
  }
  if (fn > f_tol) return false;
  *out = u;
  *at_chart_boundary = false;
  for (int a = 0; a < m; ++a) {
    if (chart.periodic(a)) continue;
    double band = 1e-9 * chart.domain().width(a);
    if (u[a] <= chart.domain().lo[a] + band || u[a] >= chart.domain().hi[a] - band)
      *at_chart_boundary = true;
  }
  return true;
}

// Seeds worth polishing for a direction: local maxima of |n.e| on the grid,
// plus anything already nearly aligned.
std::vector<int> candidate_seeds(const SeedTable& table, const Surface& surface, const Vec& e) {
  std::vector<int> out;
  std::vector<double> align(table.seeds.size(), -1.0);
  for (std::size_t i = 0; i < table.seeds.size(); ++i)
    if (!table.seeds[i].degenerate) align[i] = std::abs(table.seeds[i].unit_normal.dot(e));

  for (int chart = 0; chart < surface.chart_count(); ++chart) {
    const auto& grid = table.chart_grid[chart];
    const int m = static_cast<int>(grid.size());
    const int base = table.chart_offset[chart];
    const int count = table.chart_offset[chart + 1] - base;
    std::vector<int> stride(m, 1);
    for (int a = 1; a < m; ++a) stride[a] = stride[a - 1] * grid[a - 1];
    for (int s = 0; s < count; ++s) {
      double v = align[base + s];
      if (v < 0.0) continue;
      bool is_max = true;
      for (int a = 0; a < m && is_max; ++a) {
        int ia = (s / stride[a]) % grid[a];
        for (int dir : {-1, +1}) {
          int ja = ia + dir;
          if (surface.chart(chart).periodic(a))
            ja = (ja + grid[a]) % grid[a];
          else if (ja < 0 || ja >= grid[a])
            continue;
          int neighbor = s + (ja - ia) * stride[a];
          if (align[base + neighbor] > v) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max || v > 0.999) out.push_back(base + s);
    }
  }
  return out;
}

struct RawRoot {
  int chart;
  Vec u;
  bool at_chart_boundary;
};

std::vector<RawRoot> find_roots(const Surface& surface, const Vec& e,
                                const StationaryOptions& opts) {
  SeedTable table = build_seed_table(surface, opts.seeds_per_axis);
  std::vector<int> cands = candidate_seeds(table, surface, e);
  std::vector<RawRoot> roots;
  const double diam = surface.diameter_estimate();
  for (int ci : cands) {
    const auto& seed = table.seeds[ci];
    const Chart& chart = surface.chart(seed.chart);
    Vec u;
    bool at_boundary = false;
    if (!newton_tangency(chart, e, seed.u, &u, &at_boundary, opts)) continue;
    Vec p = chart.position(u);
    bool dup = false;
    for (auto& r : roots) {
      if ((surface.chart(r.chart).position(r.u) - p).norm() <= opts.merge_tol * diam) {
        // Keep the interior representative when a seam point is found twice.
        if (r.at_chart_boundary && !at_boundary) {
          r.chart = seed.chart;
          r.u = u;
          r.at_chart_boundary = false;
        }
        dup = true;
        break;
      }
    }
    if (!dup) roots.push_back(RawRoot{seed.chart, u, at_boundary});
  }
  return roots;
}

// Angle between the normal line and the +-e line, from |n.e|.
double line_angle(double abs_dot) {
  abs_dot = std::min(1.0, std::max(-1.0, abs_dot));
  return std::acos(abs_dot);
}

// Derivative-free polish of max |n(u).e| near a seed, constrained to the
// region; used only when no exact tangency lies inside the region.
double refine_alignment(const Surface& surface, const Region& region, int chart_index, Vec u,
                        const Vec& e, int sweeps = 4) {
  const Chart& chart = surface.chart(chart_index);
  const int m = chart.param_dim();
  auto eval = [&](const Vec& v) -> double {
    if (!chart.domain().contains(v, 1e-12)) return -1.0;
    if (!region.contains(surface, chart_index, v) &&
        region.boundary_margin(surface, chart_index, v) < -1e-12)
      return -1.0;
    Vec raw = chart.raw_normal(v);
    double n = raw.norm();
    if (n < 1e-14) return -1.0;
    return std::abs(raw.dot(e)) / n;
  };
  double best = eval(u);
  double h0 = chart.domain().max_width() / 16.0;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double h = h0 / std::pow(8.0, sweep);
    for (int a = 0; a < m; ++a) {
      for (int k = 0; k < 24; ++k) {
        Vec up = u, um = u;
        up[a] += h;
        um[a] -= h;
        up = chart.wrap(up);
        um = chart.wrap(um);
        double vp = eval(up), vm = eval(um);
        if (vp > best && vp >= vm) {
          u = up;
          best = vp;
        } else if (vm > best) {
          u = um;
          best = vm;
        } else {
          h *= 0.5;
          if (h < 1e-12 * chart.domain().max_width()) break;
        }
      }
    }
  }
  return best;
}

}  // namespace

StationaryResult stationary_points(const Surface& surface, const Region& region,
                                   const Vec& direction, const StationaryOptions& opts) {
  if (direction.size() != surface.ambient_dim() || direction.norm() == 0.0)
    fail(ErrorCode::InvalidArgument, "stationary_points: direction must be a nonzero d-vector");
  Vec e = direction / direction.norm();

  StationaryResult out;
  for (const RawRoot& root : find_roots(surface, e, opts)) {
    const Chart& chart = surface.chart(root.chart);
    Vec raw = chart.raw_normal(root.u);
    double rn = raw.norm();
    if (rn < 1e-14) continue;  // degenerate parameterization point
    double align = raw.dot(e) / rn;
    if (1.0 - std::abs(align) > opts.angular_tol) continue;

    double margin = region.boundary_margin(surface, root.chart, root.u);
    bool inside = margin > 1e-9;
    bool on_boundary = !inside && margin > -1e-9;
    if (root.at_chart_boundary && !surface.closed()) {
      inside = false;
      on_boundary = true;
    }
    if (!inside && !on_boundary) continue;

    if (!inside) {
      out.boundary_tangency = true;
      continue;
    }
    StationaryPointData data;
    data.shape = shape_data(surface, root.chart, root.u, e);
    data.normal_alignment = align;
    data.at_region_boundary = false;
    if (const Window* w = region.window(); w && w->chart_index() == root.chart)
      data.window_value = w->value(root.u);
    out.points.push_back(std::move(data));
  }

  if (out.points.empty() && !out.boundary_tangency) {
    // Distinguish "direction not attained" from "attained only at boundary":
    // rerun against the whole surface and check region margins of those roots.
    for (const RawRoot& root : find_roots(surface, e, opts)) {
      double margin = region.boundary_margin(surface, root.chart, root.u);
      if (std::abs(margin) <= 1e-6) out.boundary_tangency = true;
    }
  }
  out.non_unique = out.points.size() > 1;
  std::sort(out.points.begin(), out.points.end(), [](const auto& a, const auto& b) {
    if (a.shape.point.chart_index != b.shape.point.chart_index)
      return a.shape.point.chart_index < b.shape.point.chart_index;
    for (int i = 0; i < a.shape.point.u.size(); ++i)
      if (a.shape.point.u[i] != b.shape.point.u[i]) return a.shape.point.u[i] < b.shape.point.u[i];
    return false;
  });
  return out;
}

NormalConeQuery normal_cone_query(const Surface& surface, const Region& region, const Vec& xi,
                                  double angular_tol, const StationaryOptions& opts) {
  if (xi.size() != surface.ambient_dim() || xi.norm() == 0.0)
    fail(ErrorCode::InvalidArgument, "normal_cone_query: direction must be nonzero");
  Vec e = xi / xi.norm();

  NormalConeQuery out;
  StationaryOptions relaxed = opts;
  relaxed.angular_tol = std::max(opts.angular_tol, 1e-9);
  StationaryResult st = stationary_points(surface, region, e, relaxed);
  if (!st.points.empty()) {
    out.member = true;
    out.nearest_angle = 0.0;
    return out;
  }
  out.boundary_tangency = st.boundary_tangency;
  if (st.boundary_tangency) {
    out.nearest_angle = 0.0;
    out.member = angular_tol >= 0.0;  // attained in the closure
    return out;
  }

  // No tangency: estimate the nearest attained angle over the region.
  SeedTable table = build_seed_table(surface, opts.seeds_per_axis);
  double best = -1.0;
  int best_chart = -1;
  Vec best_u;
  for (const auto& seed : table.seeds) {
    if (seed.degenerate) continue;
    if (region.boundary_margin(surface, seed.chart, seed.u) < 0.0) continue;
    double a = std::abs(seed.unit_normal.dot(e));
    if (a > best) {
      best = a;
      best_chart = seed.chart;
      best_u = seed.u;
    }
  }
  if (best_chart < 0) {
    out.nearest_angle = 0.5 * kPi;
    return out;
  }
  best = std::max(best, refine_alignment(surface, region, best_chart, best_u, e));
  out.nearest_angle = line_angle(best);
  out.member = out.nearest_angle <= angular_tol;
  return out;
}

bool normal_cone_membership(const Surface& surface, const Region& region, const Vec& xi,
                            double angular_tol, const StationaryOptions& opts) {
  return normal_cone_query(surface, region, xi, angular_tol, opts).member;
}

namespace {

void subdivide(const Vec& a, const Vec& b, const Vec& c, int level,
               std::vector<DirectionCell>* out) {
  if (level == 0) {
    Vec center = (a + b + c).normalized();
    // Van Oosterom-Strackee solid angle of the spherical triangle.
    Eigen::Vector3d av(a[0], a[1], a[2]), bv(b[0], b[1], b[2]), cv(c[0], c[1], c[2]);
    double num = std::abs(av.dot(bv.cross(cv)));
    double den = 1.0 + av.dot(bv) + bv.dot(cv) + cv.dot(av);
    double omega = 2.0 * std::atan2(num, den);
    out->push_back(DirectionCell{center, omega});
    return;
  }
  Vec ab = (a + b).normalized(), bc = (b + c).normalized(), ca = (c + a).normalized();
  subdivide(a, ab, ca, level - 1, out);
  subdivide(ab, b, bc, level - 1, out);
  subdivide(ca, bc, c, level - 1, out);
  subdivide(ab, bc, ca, level - 1, out);
}

// Octahedron faces start with edge arc pi/2 and halve per level; the edge arc
// bounds the cell circumradius.
double max_cell_radius(int level) { return 0.5 * kPi / std::pow(2.0, level); }

}  // namespace

std::vector<DirectionCell> sphere_tessellation(int d, double angular_resolution) {
  if (!(angular_resolution > 0.0) || angular_resolution > kPi / 8.0)
    fail(ErrorCode::InvalidArgument, "sphere_tessellation: resolution must lie in (0, pi/8]");
  std::vector<DirectionCell> cells;
  if (d == 2) {
    int k = static_cast<int>(std::ceil(kTwoPi / angular_resolution));
    for (int i = 0; i < k; ++i) {
      Vec dir(2);
      double t = (i + 0.5) * kTwoPi / k;
      dir << std::cos(t), std::sin(t);
      cells.push_back(DirectionCell{dir, kTwoPi / k});
    }
    return cells;
  }
  if (d != 3)
    fail(ErrorCode::InvalidArgument, "sphere_tessellation: only d = 2, 3 supported");
  int level = 0;
  while (max_cell_radius(level) > angular_resolution && level < 9) ++level;
  for (int sx : {+1, -1})
    for (int sy : {+1, -1})
      for (int sz : {+1, -1}) {
        Vec a(3), b(3), c(3);
        a << sx, 0, 0;
        b << 0, sy, 0;
        c << 0, 0, sz;
        // Keep a consistent orientation; weights use |det| so order is safe.
        subdivide(a, b, c, level, &cells);
      }
  return cells;
}

CoverageReport normal_cone_coverage(const Surface& surface, const Region& region,
                                    double angular_resolution, double membership_tol,
                                    const StationaryOptions& opts) {
  CoverageReport report;
  report.resolution = angular_resolution;
  auto cells = sphere_tessellation(surface.ambient_dim(), angular_resolution);
  report.cells.resize(cells.size());

  parallel_for(static_cast<std::int64_t>(cells.size()), [&](std::int64_t i) {
    NormalConeQuery q = normal_cone_query(surface, region, cells[i].direction, membership_tol,
                                          opts);
    report.cells[i] = CoverageCellReport{cells[i].direction, q.member, q.nearest_angle};
  });

  double total = 0.0, covered = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    total += cells[i].weight;
    if (report.cells[i].member) covered += cells[i].weight;
  }
  report.fraction = covered / total;
  return report;
}

}  // namespace curveft
