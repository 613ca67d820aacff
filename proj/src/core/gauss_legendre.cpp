#include "core/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace curveft {

namespace {

GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i - 1] = -z;
    rule.nodes[n - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i - 1] = w;
    rule.weights[n - i] = w;
  }
  return rule;
}

std::mutex g_rules_mutex;
std::map<int, GaussLegendreRule> g_rules;

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "gauss_legendre: n must be >= 1");
  std::lock_guard<std::mutex> lock(g_rules_mutex);
  auto it = g_rules.find(n);
  if (it == g_rules.end()) it = g_rules.emplace(n, compute_rule(n)).first;
  return it->second;
}

int ladder_round_up(int n) {
  int k = 8;
  while (k < n) k = std::max(k + 4, static_cast<int>(std::ceil(k * 1.3)));
  return k;
}

int ladder_previous(int n) {
  if (n <= 8) return 8;
  int k = 8, prev = 8;
  while (k < n) {
    prev = k;
    k = std::max(k + 4, static_cast<int>(std::ceil(k * 1.3)));
  }
  return prev;
}

}  // namespace curveft
