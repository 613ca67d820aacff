#include "core/fourier.hpp"

#include "core/gauss_legendre.hpp"

#include <cmath>

namespace curveft {

FtScanResult ft_scan(const Surface& surface, const Window* window, const std::vector<Vec>& freqs,
                     const QuadOptions& opts) {
  FtScanResult out;
  out.samples.resize(freqs.size());
  std::vector<std::string> errors(freqs.size());
  parallel_for(static_cast<std::int64_t>(freqs.size()), [&](std::int64_t i) {
    try {
      out.samples[i] = ft_point(surface, window, freqs[i], opts);
    } catch (const Error& e) {
      out.samples[i].xi = freqs[i];
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < freqs.size(); ++i)
    if (!errors[i].empty()) out.failures.push_back(FtFailure{static_cast<int>(i), errors[i]});
  return out;
}

std::vector<double> spaced_values(double from, double to, int count, bool log_spacing) {
  if (count < 1) fail(ErrorCode::InvalidArgument, "spaced_values: count must be >= 1");
  if (count == 1) return {from};
  std::vector<double> out(count);
  if (log_spacing) {
    if (!(from > 0.0) || !(to > 0.0))
      fail(ErrorCode::InvalidArgument, "spaced_values: log spacing needs positive endpoints");
    double lf = std::log(from), lt = std::log(to);
    for (int i = 0; i < count; ++i) out[i] = std::exp(lf + (lt - lf) * i / (count - 1));
  } else {
    for (int i = 0; i < count; ++i) out[i] = from + (to - from) * i / (count - 1);
  }
  return out;
}

std::vector<Vec> ray_frequencies(const Vec& direction, const std::vector<double>& radii) {
  if (direction.norm() == 0.0) fail(ErrorCode::InvalidArgument, "ray: zero direction");
  Vec e = direction / direction.norm();
  std::vector<Vec> out;
  out.reserve(radii.size());
  for (double r : radii) out.push_back(r * e);
  return out;
}

std::vector<Vec> grid_frequencies(const Vec& lo, const Vec& hi, const std::vector<int>& counts) {
  const int d = static_cast<int>(lo.size());
  if (hi.size() != d || static_cast<int>(counts.size()) != d)
    fail(ErrorCode::InvalidArgument, "grid: lo/hi/counts size mismatch");
  std::int64_t total = 1;
  for (int c : counts) {
    if (c < 1) fail(ErrorCode::InvalidArgument, "grid: counts must be >= 1");
    total *= c;
  }
  std::vector<Vec> out;
  out.reserve(total);
  std::vector<int> idx(d, 0);
  for (std::int64_t flat = 0; flat < total; ++flat) {
    Vec xi(d);
    for (int a = 0; a < d; ++a)
      xi[a] = counts[a] == 1 ? lo[a] : lo[a] + (hi[a] - lo[a]) * idx[a] / (counts[a] - 1);
    out.push_back(xi);
    int a = 0;
    while (a < d && ++idx[a] == counts[a]) idx[a++] = 0;
  }
  return out;
}

StationaryData stationary_phase_eval(const Surface& surface, const Window* window, const Vec& xi,
                                     const SpOptions& opts) {
  const double q = xi.norm();
  if (q < opts.xi_min)
    fail(ErrorCode::InvalidArgument,
         "stationary_phase_eval: |xi| below the asymptotic threshold " +
             format_double(opts.xi_min));
  StationaryData out;
  out.xi = xi;
  const int d = surface.ambient_dim();
  const double decay = std::pow(q, -0.5 * (d - 1));

  StationaryResult st = stationary_points(surface, Region::whole(), xi, opts.search);
  out.non_unique = st.points.size() > 1;
  for (const auto& p : st.points) {
    double psi = 1.0;
    if (window)
      psi = (window->chart_index() == p.shape.point.chart_index) ? window->value(p.shape.point.u)
                                                                 : 0.0;
    if (psi == 0.0) continue;  // no leading contribution; remainder-class point
    double k = std::abs(p.shape.gaussian_curvature);
    if (k < opts.curvature_floor)
      fail(ErrorCode::Validation,
           "stationary_phase_eval: degenerate stationary point (|K| = " + format_double(k) +
               ") on chart " + std::to_string(p.shape.point.chart_index));
    StationaryTerm term;
    term.point = p.shape.point;
    term.abs_curvature = k;
    term.signature = p.shape.signature;
    term.window_value = psi;
    double phase = -kTwoPi * p.shape.point.position.dot(xi) - 0.25 * kPi * p.shape.signature;
    term.term = std::polar(psi / std::sqrt(k) * decay, phase);
    out.value += term.term;
    out.terms.push_back(std::move(term));
  }
  return out;
}

AsymptoticCompareReport asymptotic_compare(const Surface& surface, const Window* window,
                                           const Vec& direction, const std::vector<double>& radii,
                                           const QuadOptions& quad, const SpOptions& sp) {
  if (radii.size() < 8)
    fail(ErrorCode::InvalidArgument, "asymptotic_compare: need at least 8 radii");
  Vec e = direction / direction.norm();
  const int d = surface.ambient_dim();

  AsymptoticCompareReport report;
  report.rows.resize(radii.size());
  parallel_for(static_cast<std::int64_t>(radii.size()), [&](std::int64_t i) {
    Vec xi = radii[i] * e;
    AsymptoticCompareRow row;
    row.q = radii[i];
    row.ft = ft_point(surface, window, xi, quad).value;
    row.sp = stationary_phase_eval(surface, window, xi, sp).value;
    row.abs_dev = std::abs(row.ft - row.sp);
    row.normalized_dev = row.abs_dev * std::pow(radii[i], 0.5 * (d - 1));
    report.rows[i] = row;
  });

  std::vector<double> q, nd;
  for (const auto& r : report.rows) {
    q.push_back(r.q);
    nd.push_back(r.normalized_dev);
    report.max_normalized_dev = std::max(report.max_normalized_dev, r.normalized_dev);
  }
  report.deviation_fit = binned_max_fit(q, nd, std::max(6, static_cast<int>(radii.size()) / 4));
  return report;
}

Complex hemisphere_axis_integral(int d, double q) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "hemisphere_axis_integral: d must be >= 2");
  const double half_pi = 0.5 * kPi;
  int base = std::max(64, static_cast<int>(std::ceil(6.0 * (1.0 + std::abs(q)) * half_pi)));
  int n = ladder_round_up(base);
  auto eval = [&](int nodes) {
    const auto& rule = gauss_legendre(nodes);
    Kahan re, im;
    for (int i = 0; i < nodes; ++i) {
      double t = 0.5 * half_pi * (1.0 + rule.nodes[i]);
      double w = 0.5 * half_pi * rule.weights[i] * std::pow(std::sin(t), d - 2);
      double phase = -kTwoPi * q * std::cos(t);
      re.add(w * std::cos(phase));
      im.add(w * std::sin(phase));
    }
    return Complex(re.value(), im.value());
  };
  Complex fine = eval(n);
  Complex coarse = eval(ladder_previous(n));
  if (std::abs(fine - coarse) > 1e-8)
    fail(ErrorCode::Quadrature, "hemisphere_axis_integral: quadrature did not settle");
  return fine;
}

HemisphereProfileReport hemisphere_axis_profile(int d, const std::vector<double>& q) {
  HemisphereProfileReport report;
  report.q = q;
  report.integral.resize(q.size());
  report.scaled_abs.resize(q.size());
  parallel_for(static_cast<std::int64_t>(q.size()), [&](std::int64_t i) {
    report.integral[i] = hemisphere_axis_integral(d, q[i]);
    report.scaled_abs[i] = std::abs(q[i]) * std::abs(report.integral[i]);
  });
  std::vector<double> lq, lv;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    double a = std::abs(report.integral[i]);
    if (a <= 0.0) continue;
    lq.push_back(std::log(q[i]));
    lv.push_back(std::log(a));
  }
  if (lq.size() >= 2) report.decay_fit = fit_line(lq, lv);
  report.scaled_min = *std::min_element(report.scaled_abs.begin(), report.scaled_abs.end());
  report.scaled_max = *std::max_element(report.scaled_abs.begin(), report.scaled_abs.end());
  return report;
}

SymmetryCheckReport hemisphere_symmetry_check(const Surface& full, const Surface& half,
                                              const std::vector<Vec>& freqs,
                                              const QuadOptions& opts) {
  SymmetryCheckReport report;
  report.count = static_cast<int>(freqs.size());
  std::vector<double> devs(freqs.size(), 0.0);
  parallel_for(static_cast<std::int64_t>(freqs.size()), [&](std::int64_t i) {
    Complex vh = ft_point(half, nullptr, freqs[i], opts).value;
    Complex vf = ft_point(full, nullptr, freqs[i], opts).value;
    devs[i] = std::abs(2.0 * vh.real() - vf);
  });
  for (double dv : devs) report.max_deviation = std::max(report.max_deviation, dv);
  return report;
}

}  // namespace curveft
