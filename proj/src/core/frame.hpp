#pragma once

#include "core/fourier.hpp"
#include "core/spectrum.hpp"

namespace curveft {

// --- translated energy ----------------------------------------------------------

struct EnergyScanResult {
  std::vector<double> energy;  // E(xi) = sum_lambda |mu_hat(lambda - xi)|^2
  double min_energy = 0.0;
  double max_energy = 0.0;
};

EnergyScanResult energy_scan(const Surface& surface, const Window* window,
                             const Spectrum& spectrum, const std::vector<Vec>& grid,
                             const QuadOptions& opts = {},
                             std::int64_t budget = 20'000'000);

// --- cone filtering ---------------------------------------------------------------

struct ConeFilterResult {
  std::vector<bool> in_cone;  // per spectrum point; lambda = 0 is in every cone
  std::int64_t inside = 0, outside = 0;
};

ConeFilterResult cone_filter(const Spectrum& spectrum, const Surface& surface,
                             const Region& region, double angular_tol,
                             const StationaryOptions& opts = {});

// --- the cone lower bound ----------------------------------------------------------

struct ConeLowerBoundSample {
  Vec lambda;
  double scaled_power = 0.0;  // |mu_hat(lambda)|^2 |lambda|^{d-1}
  double predicted = 0.0;     // (|K|^{-1/2} psi(p))^2 from the stationary point
  double ratio = 0.0;
};

struct ConeLowerBoundReport {
  std::vector<ConeLowerBoundSample> samples;
  double min_scaled_power = 0.0;
  double min_ratio = 0.0;  // min of scaled_power / predicted
  bool non_unique = false;
};

// Samples frequencies inside the cone of {psi >= floor} (directions are
// normals attained on a grid of superlevel points, radii as given) and checks
// |psi dsigma ^(lambda)|^2 |lambda|^{d-1} against the single-point
// stationary-phase prediction.
ConeLowerBoundReport cone_lower_bound_check(const Surface& surface, const Window& window,
                                            const std::vector<double>& radii, int n_directions,
                                            const QuadOptions& quad = {},
                                            const SpOptions& sp = {});

// --- frame-bound estimation ----------------------------------------------------------

struct FrameEstimate {
  int h_size = 0;
  std::int64_t lambda_size = 0;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  double cond_g = 0.0;
};

// Builds A[h,h'] = sum_l conj(mu_hat(l-h)) mu_hat(l-h') and the exponential
// Gram G[h,h'] = mu_hat(h-h') on the test frequencies H, then solves the
// generalized Hermitian eigenproblem. alpha_min/max bound the frame ratio on
// span{e_h} exactly up to quadrature error.
FrameEstimate frame_bounds_estimate(const Surface& surface, const Window* window,
                                    const Spectrum& spectrum, const std::vector<Vec>& test_grid,
                                    const QuadOptions& opts = {});

// Shared-cache sweep over nested test grids (prefixes of `test_grid`).
std::vector<FrameEstimate> frame_bounds_sweep(const Surface& surface, const Window* window,
                                              const Spectrum& spectrum,
                                              const std::vector<Vec>& test_grid,
                                              const std::vector<int>& sizes,
                                              const QuadOptions& opts = {});

}  // namespace curveft
