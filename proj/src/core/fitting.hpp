#pragma once

#include "core/common.hpp"

namespace curveft {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms residual of the fit
  int n_used = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Indices of strict local maxima of |v| (interior points only).
std::vector<int> local_maxima(const std::vector<double>& v);

// Linearly interpolated sign changes of v against the x grid.
std::vector<double> zero_crossings(const std::vector<double>& x, const std::vector<double>& v);

// Envelope decay exponent of samples (x_i, |v_i|): log-log line through the
// local maxima of |v|. Requires at least min_points maxima.
LineFit envelope_fit(const std::vector<double>& x, const std::vector<double>& abs_v,
                     int min_points = 8);

// Robust slope of a decaying but oscillating deviation: bins the samples and
// fits the log of per-bin maxima (log-log).
LineFit binned_max_fit(const std::vector<double>& x, const std::vector<double>& y, int bins,
                       int min_points = 4);

struct DecayPhaseFit {
  LineFit envelope;           // exponent of |value| against |xi|
  std::vector<double> zeros;  // zero crossings of Re(value)
  double zero_offset_max_dev = 0.0;   // vs |xi| = offset + k/2
  double zero_offset_mean_dev = 0.0;
  double max_im_over_re = 0.0;
  int dim = 0;
};

// Fits the oscillatory decay law along a ray: envelope exponent plus zero
// locations compared against |xi| = (d-1)/8 + 1/4 + k/2.
DecayPhaseFit decay_phase_fit(const std::vector<double>& q, const std::vector<Complex>& value,
                              int d);

}  // namespace curveft
