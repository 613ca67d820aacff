#include "core/frame.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace curveft {

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (a[i] > b[i]) return false;
    }
    return false;
  }
};

// Evaluates mu_hat on the union of requested frequencies once (parallel over
// unique points, deterministic assembly afterwards).
class FtMemo {
 public:
  FtMemo(const Surface& surface, const Window* window, const QuadOptions& opts)
      : surface_(surface), window_(window), opts_(opts) {}

  void request(const Vec& xi) { values_.emplace(xi, Complex(0, 0)); }

  void evaluate() {
    std::vector<std::map<Vec, Complex, VecLess>::iterator> items;
    for (auto it = values_.begin(); it != values_.end(); ++it) items.push_back(it);
    parallel_for(static_cast<std::int64_t>(items.size()), [&](std::int64_t i) {
      items[i]->second = ft_point(surface_, window_, items[i]->first, opts_).value;
    });
  }

  Complex at(const Vec& xi) const {
    auto it = values_.find(xi);
    if (it == values_.end()) fail(ErrorCode::Internal, "FtMemo: frequency not prefetched");
    return it->second;
  }

 private:
  const Surface& surface_;
  const Window* window_;
  QuadOptions opts_;
  std::map<Vec, Complex, VecLess> values_;
};

}  // namespace

EnergyScanResult energy_scan(const Surface& surface, const Window* window,
                             const Spectrum& spectrum, const std::vector<Vec>& grid,
                             const QuadOptions& opts, std::int64_t budget) {
  if (spectrum.size() * static_cast<std::int64_t>(grid.size()) > budget)
    fail(ErrorCode::Budget, "energy_scan: |grid| * |spectrum| exceeds the evaluation budget");
  EnergyScanResult out;
  out.energy.assign(grid.size(), 0.0);
  if (grid.empty()) return out;

  FtMemo memo(surface, window, opts);
  for (const Vec& xi : grid)
    for (const Vec& lam : spectrum.points) memo.request(lam - xi);
  memo.evaluate();

  for (std::size_t i = 0; i < grid.size(); ++i) {
    Kahan acc;
    for (const Vec& lam : spectrum.points) {
      double a = std::abs(memo.at(lam - grid[i]));
      acc.add(a * a);
    }
    out.energy[i] = acc.value();
  }
  out.min_energy = *std::min_element(out.energy.begin(), out.energy.end());
  out.max_energy = *std::max_element(out.energy.begin(), out.energy.end());
  return out;
}

ConeFilterResult cone_filter(const Spectrum& spectrum, const Surface& surface,
                             const Region& region, double angular_tol,
                             const StationaryOptions& opts) {
  ConeFilterResult out;
  out.in_cone.assign(spectrum.points.size(), false);
  std::vector<char> flags(spectrum.points.size(), 0);
  parallel_for(spectrum.size(), [&](std::int64_t i) {
    const Vec& lam = spectrum.points[i];
    bool member = lam.norm() == 0.0
                      ? true  // the normal lines are subspaces; 0 lies in all of them
                      : normal_cone_membership(surface, region, lam, angular_tol, opts);
    flags[i] = member ? 1 : 0;
  });
  for (std::size_t i = 0; i < flags.size(); ++i) {
    out.in_cone[i] = flags[i] != 0;
    (flags[i] ? out.inside : out.outside) += 1;
  }
  return out;
}

ConeLowerBoundReport cone_lower_bound_check(const Surface& surface, const Window& window,
                                            const std::vector<double>& radii, int n_directions,
                                            const QuadOptions& quad, const SpOptions& sp) {
  if (n_directions < 1 || radii.empty())
    fail(ErrorCode::InvalidArgument, "cone_lower_bound_check: need directions and radii");
  const Chart& chart = surface.chart(window.chart_index());
  const int m = chart.param_dim();

  // Directions: normals attained on a grid inside {psi >= floor}; by
  // construction every sampled frequency lies in the cone.
  Box level_box = window.superlevel_bounding_box(window.floor());
  std::vector<Vec> dirs;
  int per_axis = std::max(2, static_cast<int>(std::ceil(std::pow(4.0 * n_directions, 1.0 / m))));
  std::vector<int> idx(m, 0);
  Vec u(m);
  std::vector<Vec> candidates;
  for (;;) {
    for (int a = 0; a < m; ++a)
      u[a] = level_box.lo[a] + (idx[a] + 0.5) / per_axis * level_box.width(a);
    if (window.value(u) >= window.floor()) {
      Vec raw = chart.raw_normal(u);
      double n = raw.norm();
      if (n > 1e-14) candidates.push_back(raw / n);
    }
    int a = 0;
    while (a < m && ++idx[a] == per_axis) idx[a++] = 0;
    if (a == m) break;
  }
  if (candidates.empty())
    fail(ErrorCode::Validation, "cone_lower_bound_check: empty window superlevel set");
  for (int i = 0; i < n_directions; ++i) {
    std::size_t pick = ((2 * i + 1) * candidates.size()) / (2 * n_directions);
    dirs.push_back(candidates[std::min(pick, candidates.size() - 1)]);
  }

  ConeLowerBoundReport report;
  const int d = surface.ambient_dim();
  std::mutex mtx;
  std::vector<ConeLowerBoundSample> samples(dirs.size() * radii.size());
  std::vector<char> non_unique(dirs.size() * radii.size(), 0);
  parallel_for(static_cast<std::int64_t>(samples.size()), [&](std::int64_t k) {
    const Vec& e = dirs[k / radii.size()];
    double q = radii[k % radii.size()];
    Vec lam = q * e;
    ConeLowerBoundSample s;
    s.lambda = lam;
    double a = std::abs(ft_point(surface, &window, lam, quad).value);
    s.scaled_power = a * a * std::pow(q, d - 1.0);
    StationaryData sd = stationary_phase_eval(surface, &window, lam, sp);
    if (sd.non_unique) non_unique[k] = 1;
    double pred = 0.0;
    for (const auto& t : sd.terms) pred += t.window_value / std::sqrt(t.abs_curvature);
    s.predicted = pred * pred;
    s.ratio = s.predicted > 0.0 ? s.scaled_power / s.predicted
                                : std::numeric_limits<double>::infinity();
    samples[k] = std::move(s);
  });

  report.samples = std::move(samples);
  report.min_scaled_power = std::numeric_limits<double>::infinity();
  report.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < report.samples.size(); ++k) {
    report.min_scaled_power = std::min(report.min_scaled_power, report.samples[k].scaled_power);
    report.min_ratio = std::min(report.min_ratio, report.samples[k].ratio);
    if (non_unique[k]) report.non_unique = true;
  }
  return report;
}

namespace {

FrameEstimate solve_frame_problem(const CMat& a_mat, const CMat& g_mat, std::int64_t lambda_size) {
  const int n = static_cast<int>(g_mat.rows());
  FrameEstimate est;
  est.h_size = n;
  est.lambda_size = lambda_size;

  Eigen::SelfAdjointEigenSolver<CMat> ges(g_mat);
  if (ges.info() != Eigen::Success)
    fail(ErrorCode::Singular, "frame_bounds: Gram eigensolve failed");
  double gmin = ges.eigenvalues().minCoeff();
  double gmax = ges.eigenvalues().maxCoeff();
  est.cond_g = gmin > 0.0 ? gmax / gmin : std::numeric_limits<double>::infinity();
  if (!(gmin > 0.0) || est.cond_g > 1e12)
    fail(ErrorCode::Singular,
         "frame_bounds: Gram matrix numerically singular (cond = " + format_double(est.cond_g) +
             "); choose better-separated test frequencies");

  Eigen::LLT<CMat> llt(g_mat);
  if (llt.info() != Eigen::Success)
    fail(ErrorCode::Singular, "frame_bounds: Gram Cholesky failed");
  CMat l = llt.matrixL();
  CMat half = l.triangularView<Eigen::Lower>().solve(a_mat);
  CMat reduced =
      l.triangularView<Eigen::Lower>().solve(half.adjoint().eval()).adjoint();
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMat> es(reduced);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::Singular, "frame_bounds: reduced eigensolve failed");
  est.alpha_min = es.eigenvalues().minCoeff();
  est.alpha_max = es.eigenvalues().maxCoeff();
  return est;
}

}  // namespace

std::vector<FrameEstimate> frame_bounds_sweep(const Surface& surface, const Window* window,
                                              const Spectrum& spectrum,
                                              const std::vector<Vec>& test_grid,
                                              const std::vector<int>& sizes,
                                              const QuadOptions& opts) {
  if (test_grid.empty() || test_grid.size() > 256)
    fail(ErrorCode::InvalidArgument, "frame_bounds: test grid size must lie in [1, 256]");
  for (std::size_t i = 0; i < test_grid.size(); ++i)
    for (std::size_t j = i + 1; j < test_grid.size(); ++j)
      if ((test_grid[i] - test_grid[j]).norm() == 0.0)
        fail(ErrorCode::InvalidArgument, "frame_bounds: test frequencies must be distinct");

  FtMemo memo(surface, window, opts);
  for (const Vec& h : test_grid) {
    for (const Vec& hp : test_grid) memo.request(h - hp);
    for (const Vec& lam : spectrum.points) memo.request(lam - h);
  }
  memo.evaluate();

  const int n_full = static_cast<int>(test_grid.size());
  CMat a_full(n_full, n_full), g_full(n_full, n_full);
  for (int i = 0; i < n_full; ++i)
    for (int j = 0; j < n_full; ++j) {
      // <e_{h_j}, e_{h_i}>_{L^2(mu)} = mu_hat(h_i - h_j)
      g_full(i, j) = memo.at(test_grid[i] - test_grid[j]);
      Complex s(0.0, 0.0);
      for (const Vec& lam : spectrum.points)
        s += std::conj(memo.at(lam - test_grid[i])) * memo.at(lam - test_grid[j]);
      a_full(i, j) = s;
    }
  g_full = 0.5 * (g_full + g_full.adjoint()).eval();
  a_full = 0.5 * (a_full + a_full.adjoint()).eval();

  std::vector<FrameEstimate> out;
  for (int size : sizes) {
    if (size < 1 || size > n_full)
      fail(ErrorCode::InvalidArgument, "frame_bounds: sweep size out of range");
    out.push_back(solve_frame_problem(a_full.topLeftCorner(size, size),
                                      g_full.topLeftCorner(size, size), spectrum.size()));
  }
  return out;
}

FrameEstimate frame_bounds_estimate(const Surface& surface, const Window* window,
                                    const Spectrum& spectrum, const std::vector<Vec>& test_grid,
                                    const QuadOptions& opts) {
  return frame_bounds_sweep(surface, window, spectrum, test_grid,
                            {static_cast<int>(test_grid.size())}, opts)
      .front();
}

}  // namespace curveft
