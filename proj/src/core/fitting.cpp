#include "core/fitting.hpp"

#include <algorithm>
#include <cmath>

namespace curveft {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    fail(ErrorCode::InvalidArgument, "fit_line: need at least two samples");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) fail(ErrorCode::InvalidArgument, "fit_line: degenerate abscissae");
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = y[i] - fit.slope * x[i] - fit.intercept;
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.n_used = n;
  return fit;
}

std::vector<int> local_maxima(const std::vector<double>& v) {
  std::vector<int> out;
  for (int i = 1; i + 1 < static_cast<int>(v.size()); ++i)
    if (v[i] > v[i - 1] && v[i] >= v[i + 1]) out.push_back(i);
  return out;
}

std::vector<double> zero_crossings(const std::vector<double>& x, const std::vector<double>& v) {
  std::vector<double> zeros;
  for (int i = 0; i + 1 < static_cast<int>(v.size()); ++i) {
    if (v[i] == 0.0) {
      zeros.push_back(x[i]);
      continue;
    }
    if ((v[i] > 0.0) != (v[i + 1] > 0.0)) {
      double t = v[i] / (v[i] - v[i + 1]);
      zeros.push_back(x[i] + t * (x[i + 1] - x[i]));
    }
  }
  return zeros;
}

LineFit envelope_fit(const std::vector<double>& x, const std::vector<double>& abs_v,
                     int min_points) {
  auto peaks = local_maxima(abs_v);
  if (static_cast<int>(peaks.size()) < min_points)
    fail(ErrorCode::NonConvergence, "envelope_fit: fewer than " + std::to_string(min_points) +
                                        " envelope maxima in the sampled range");
  std::vector<double> lx, ly;
  for (int i : peaks) {
    if (abs_v[i] <= 0.0 || x[i] <= 0.0) continue;
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(abs_v[i]));
  }
  if (static_cast<int>(lx.size()) < min_points)
    fail(ErrorCode::NonConvergence, "envelope_fit: too few positive envelope maxima");
  return fit_line(lx, ly);
}

LineFit binned_max_fit(const std::vector<double>& x, const std::vector<double>& y, int bins,
                       int min_points) {
  if (x.size() != y.size() || x.empty())
    fail(ErrorCode::InvalidArgument, "binned_max_fit: empty input");
  std::vector<double> lx, ly;
  const int n = static_cast<int>(x.size());
  const int per = std::max(1, n / std::max(1, bins));
  for (int start = 0; start < n; start += per) {
    int end = std::min(n, start + per);
    int best = -1;
    for (int i = start; i < end; ++i)
      if (y[i] > 0.0 && (best < 0 || y[i] > y[best])) best = i;
    if (best >= 0 && x[best] > 0.0) {
      lx.push_back(std::log(x[best]));
      ly.push_back(std::log(y[best]));
    }
  }
  if (static_cast<int>(lx.size()) < min_points)
    fail(ErrorCode::NonConvergence, "binned_max_fit: too few usable bins");
  return fit_line(lx, ly);
}

DecayPhaseFit decay_phase_fit(const std::vector<double>& q, const std::vector<Complex>& value,
                              int d) {
  if (q.size() != value.size() || q.size() < 16)
    fail(ErrorCode::InvalidArgument, "decay_phase_fit: need at least 16 samples on the ray");
  DecayPhaseFit out;
  out.dim = d;

  std::vector<double> abs_v(q.size()), re_v(q.size());
  double max_re = 0.0, max_im = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    abs_v[i] = std::abs(value[i]);
    re_v[i] = value[i].real();
    max_re = std::max(max_re, std::abs(value[i].real()));
    max_im = std::max(max_im, std::abs(value[i].imag()));
  }
  out.max_im_over_re = max_re > 0.0 ? max_im / max_re : std::numeric_limits<double>::infinity();

  out.envelope = envelope_fit(q, abs_v);

  out.zeros = zero_crossings(q, re_v);
  if (out.zeros.size() < 4)
    fail(ErrorCode::NonConvergence, "decay_phase_fit: insufficient zero crossings");

  const double offset = (d - 1) / 8.0 + 0.25;
  double max_dev = 0.0, sum_dev = 0.0;
  for (double z : out.zeros) {
    double t = z - offset;
    double frac = t - 0.5 * std::round(t / 0.5);
    max_dev = std::max(max_dev, std::abs(frac));
    sum_dev += std::abs(frac);
  }
  out.zero_offset_max_dev = max_dev;
  out.zero_offset_mean_dev = sum_dev / out.zeros.size();
  return out;
}

}  // namespace curveft
