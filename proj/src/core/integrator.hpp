#pragma once

#include "core/surface.hpp"

namespace curveft {

struct QuadOptions {
  int min_nodes_per_axis = 16;     // N0
  double nyquist_factor = 6.0;     // nodes per axis per unit of (1+|xi|) * width * speed
  // Tolerance on the two-rung error estimate: absolute for transforms,
  // relative to max(1, mass) for total_mass.
  double fail_tol = 1e-6;
  int max_nodes_per_axis = 30000;
  std::int64_t max_nodes_total = 40000000;  // per chart per evaluation
  int max_refinements = 5;
};

// One Fourier transform sample of the (windowed) surface measure with the
// e^{-2 pi i x.xi} kernel. est_error is |I_n - I_prev| over the node ladder,
// an upper-style estimate for the reported value I_n.
struct FourierSample {
  Vec xi;
  Complex value{0.0, 0.0};
  std::int64_t node_count = 0;
  double est_error = 0.0;
};

struct MassResult {
  double value = 0.0;
  double est_error = 0.0;
  std::int64_t node_count = 0;
};

// Quadrature of the multiplicity-weighted area element (times the window).
// Fails when the node-refined estimate will not settle below tolerance.
MassResult total_mass(const Surface& surface, const Window* window = nullptr,
                      const QuadOptions& opts = {});

FourierSample ft_point(const Surface& surface, const Window* window, const Vec& xi,
                       const QuadOptions& opts = {});

// Per-axis node counts the Nyquist rule picks for a chart at frequency |xi|
// (after ladder rounding); exposed for the refinement-stability tests.
std::vector<int> nodes_for_chart(const Chart& chart, const Box& box, double xi_norm,
                                 const QuadOptions& opts);

FourierSample ft_point_with_nodes(const Surface& surface, const Window* window, const Vec& xi,
                                  const std::vector<std::vector<int>>& per_chart_nodes);

void set_geometry_cache_budget(std::size_t bytes);
void clear_geometry_cache();

}  // namespace curveft
