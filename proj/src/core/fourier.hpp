#pragma once

#include "core/fitting.hpp"
#include "core/integrator.hpp"
#include "core/stationary.hpp"

namespace curveft {

struct FtFailure {
  int index = 0;
  std::string message;
};

struct FtScanResult {
  std::vector<FourierSample> samples;  // one per requested frequency, in order
  std::vector<FtFailure> failures;     // failed entries carry value 0, node_count 0
};

// Evaluates all frequencies (deterministic order = input order); per-point
// quadrature failures are recorded and the scan continues.
FtScanResult ft_scan(const Surface& surface, const Window* window, const std::vector<Vec>& freqs,
                     const QuadOptions& opts = {});

std::vector<double> spaced_values(double from, double to, int count, bool log_spacing);
std::vector<Vec> ray_frequencies(const Vec& direction, const std::vector<double>& radii);
std::vector<Vec> grid_frequencies(const Vec& lo, const Vec& hi, const std::vector<int>& counts);

// --- stationary phase ---------------------------------------------------------

struct SpOptions {
  double xi_min = 5.0;             // asymptotic regime threshold
  double curvature_floor = 1e-12;  // |K| below this is a degenerate stationary point
  StationaryOptions search;
};

struct StationaryTerm {
  SurfacePoint point;
  double abs_curvature = 0.0;  // |det II / det I| = |K|, the graph Hessian determinant
  int signature = 0;           // of II w.r.t. the normal oriented along +xi
  double window_value = 1.0;
  Complex term{0.0, 0.0};      // e^{-2 pi i p.xi} e^{-i pi s/4} |K|^{-1/2} psi(p) |xi|^{-(d-1)/2}
};

struct StationaryData {
  Vec xi;
  std::vector<StationaryTerm> terms;
  Complex value{0.0, 0.0};  // sum of the leading terms
  bool non_unique = false;
};

// Leading stationary-phase value of the windowed surface-measure transform:
// sum over points with normal parallel to +-xi, weighted by the window.
StationaryData stationary_phase_eval(const Surface& surface, const Window* window, const Vec& xi,
                                     const SpOptions& opts = {});

// --- asymptotic comparison ------------------------------------------------------

struct AsymptoticCompareRow {
  double q = 0.0;
  Complex ft{0.0, 0.0};
  Complex sp{0.0, 0.0};
  double abs_dev = 0.0;
  double normalized_dev = 0.0;  // abs_dev * q^{(d-1)/2}
};

struct AsymptoticCompareReport {
  std::vector<AsymptoticCompareRow> rows;
  LineFit deviation_fit;  // slope of log(normalized_dev) vs log q (binned maxima)
  double max_normalized_dev = 0.0;
};

AsymptoticCompareReport asymptotic_compare(const Surface& surface, const Window* window,
                                           const Vec& direction, const std::vector<double>& radii,
                                           const QuadOptions& quad = {},
                                           const SpOptions& sp = {});

// --- hemisphere ----------------------------------------------------------------

struct HemisphereProfileReport {
  std::vector<double> q;
  std::vector<Complex> integral;     // I(q) = int_0^{pi/2} e^{-2 pi i q cos t} sin^{d-2} t dt
  std::vector<double> scaled_abs;    // q * |I(q)|
  LineFit decay_fit;                 // slope of log|I| vs log q
  double scaled_min = 0.0, scaled_max = 0.0;
};

Complex hemisphere_axis_integral(int d, double q);
HemisphereProfileReport hemisphere_axis_profile(int d, const std::vector<double>& q);

// max over the grid of |2 Re ft(S+, xi) - ft(S, xi)| for a centrally
// symmetric pair.
struct SymmetryCheckReport {
  double max_deviation = 0.0;
  int count = 0;
};
SymmetryCheckReport hemisphere_symmetry_check(const Surface& full, const Surface& half,
                                              const std::vector<Vec>& freqs,
                                              const QuadOptions& opts = {});

}  // namespace curveft
