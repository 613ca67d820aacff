#pragma once

#include "core/common.hpp"

namespace curveft {

// Gauss-Legendre rule on [-1, 1]. Rules are computed once per node count and
// cached process-wide (Newton iteration on the Legendre recurrence).
struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // sum to 2
};

const GaussLegendreRule& gauss_legendre(int n);

// Node ladder used by the integrators: geometric growth so nearby requests
// land on the same cached rule.
int ladder_round_up(int n);
int ladder_previous(int n);

}  // namespace curveft
