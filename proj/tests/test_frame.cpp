#include "core/catalog.hpp"
#include "core/frame.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace curveft;

namespace {
Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
}  // namespace

TEST_CASE("spectrum generation: counts, determinism, ordering") {
  Spectrum ball = generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 2.5));
  CHECK(ball.size() == 21);
  CHECK(ball.size() == oracles::lattice_ball_count(2, 1.0, 2.5));
  // Sorted by (|l|, lex) with 0 first.
  CHECK(ball.points.front().norm() == 0.0);
  for (std::size_t i = 1; i < ball.points.size(); ++i)
    CHECK(ball.points[i - 1].norm() <= ball.points[i].norm() + 1e-12);
  // Deterministic regeneration.
  Spectrum again = generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 2.5));
  for (std::size_t i = 0; i < ball.points.size(); ++i)
    CHECK((ball.points[i] - again.points[i]).norm() == 0.0);

  Spectrum axis = generate_spectrum(SpectrumSpec::axis_line(3, 1.0, 3.0));
  CHECK(axis.size() == 7);  // 0 and +-1..3 on the last axis
  for (const Vec& p : axis.points) CHECK(p.head(2).norm() == 0.0);

  Vec cone_axis = vec2(0, 1);
  Spectrum degenerate =
      generate_spectrum(SpectrumSpec::cone_lattice(cone_axis, 0.0, 1.0, 5.0));
  for (const Vec& p : degenerate.points) CHECK(p[0] == 0.0);  // axis points only

  SpectrumSpec no_zero = SpectrumSpec::lattice_ball(2, 1.0, 2.5);
  no_zero.exclude_zero = true;
  CHECK(generate_spectrum(no_zero).size() == 20);
}

TEST_CASE("spectrum generation refuses more than 10^7 points") {
  CHECK_THROWS_AS(generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 2000.0)), Error);
}

TEST_CASE("cone lattice matches the brute-force angle oracle") {
  Vec axis = vec2(0, 1);
  double half_angle = kPi / 12.0;
  Spectrum cone = generate_spectrum(SpectrumSpec::cone_lattice(axis, half_angle, 1.0, 10.0));
  Spectrum ball = generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 10.0));
  std::int64_t oracle = 0;
  for (const Vec& p : ball.points) {
    double n = p.norm();
    if (n == 0.0 || std::abs(p[1]) / n >= std::cos(half_angle)) ++oracle;
  }
  CHECK(cone.size() == oracle);
}

TEST_CASE("divergence partial sums: plane lattice grows, axis line converges") {
  auto plane = divergence_partial_sum(SpectrumSpec::lattice_ball(2, 1.0, 100.0), 2,
                                      {25.0, 50.0, 100.0});
  CHECK(plane.sums[0] < plane.sums[1]);
  CHECK(plane.sums[1] < plane.sums[2]);
  for (double g : plane.growth) CHECK(g == doctest::Approx(2.0).epsilon(0.05));

  auto axis = divergence_partial_sum(SpectrumSpec::axis_line(3, 1.0, 1000.0), 3, {1000.0});
  CHECK(std::abs(axis.sums[0] - kPi * kPi / 3.0) <= 2e-3);
}

TEST_CASE("divergence sums are permutation invariant and stabilize for finite spectra") {
  std::vector<Vec> pts = {vec2(1, 0), vec2(0, 2), vec2(-3, 1), vec2(2, 2), vec2(0, 0)};
  std::vector<Vec> shuffled = {pts[3], pts[0], pts[4], pts[2], pts[1]};
  auto a = divergence_partial_sum(SpectrumSpec::explicit_list(pts), 2, {1.5, 4.0, 8.0});
  auto b = divergence_partial_sum(SpectrumSpec::explicit_list(shuffled), 2, {1.5, 4.0, 8.0});
  for (int i = 0; i < 3; ++i) CHECK(a.sums[i] == b.sums[i]);
  CHECK(a.sums[1] == a.sums[2]);  // stabilized exactly past max |lambda|
  CHECK(a.sums[0] <= a.sums[1]);
}

TEST_CASE("energy scan: zero-difference term dominates and shifts cancel") {
  Surface c = circle(1.0);
  double mass = kTwoPi;
  Spectrum small = generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 3.0));

  EnergyScanResult at_lambda = energy_scan(c, nullptr, small, {vec2(1.0, 1.0)});
  CHECK(at_lambda.energy[0] >= mass * mass - 1e-6);

  // Term lower bound at a generic point.
  Vec xi = vec2(0.37, -0.18);
  EnergyScanResult e = energy_scan(c, nullptr, small, {xi});
  Vec lam_star = small.points[4];
  double term = std::abs(ft_point(c, nullptr, lam_star - xi).value);
  CHECK(e.energy[0] >= term * term - 1e-9);

  // Invariance under a simultaneous shift of the spectrum and the grid.
  Vec shift = vec2(0.4, -0.9);
  std::vector<Vec> shifted_pts;
  for (const Vec& p : small.points) shifted_pts.push_back(p + shift);
  Spectrum shifted = generate_spectrum(SpectrumSpec::explicit_list(shifted_pts));
  EnergyScanResult e2 = energy_scan(c, nullptr, shifted, {xi + shift});
  CHECK(e2.energy[0] == doctest::Approx(e.energy[0]).epsilon(1e-9));
}

TEST_CASE("energy scan: the min over a grid grows with the spectrum radius") {
  Surface c = circle(1.0);
  std::vector<Vec> grid = {vec2(0.21, 0.13), vec2(0.43, 0.37), vec2(0.11, 0.45)};
  double min10 = energy_scan(c, nullptr, generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 10.0)),
                             grid)
                     .min_energy;
  double min20 = energy_scan(c, nullptr, generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 20.0)),
                             grid)
                     .min_energy;
  CHECK(min20 >= 1.3 * min10);
}

TEST_CASE("energy scan: empty spectrum gives identically zero energy") {
  Surface c = circle(1.0);
  SpectrumSpec zero_only = SpectrumSpec::explicit_list({vec2(0, 0)});
  zero_only.exclude_zero = true;
  Spectrum empty = generate_spectrum(zero_only);
  CHECK(empty.size() == 0);
  EnergyScanResult e = energy_scan(c, nullptr, empty, {vec2(0.3, 0.4)});
  CHECK(e.energy[0] == 0.0);
}

TEST_CASE("energy scan refuses oversized workloads") {
  Surface c = circle(1.0);
  Spectrum sp = generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 3.0));
  CHECK_THROWS_AS(energy_scan(c, nullptr, sp, {vec2(0, 0)}, QuadOptions{}, 10), Error);
}

TEST_CASE("cone filter: partitions and degenerate cases") {
  Surface s = sphere(3, 1.0);
  Spectrum sp = generate_spectrum(SpectrumSpec::lattice_ball(3, 1.0, 2.0));
  ConeFilterResult all_in = cone_filter(sp, s, Region::whole(), 1e-3);
  CHECK(all_in.outside == 0);
  CHECK(all_in.inside == sp.size());

  // Arc cap with aperture pi/12 against a planar lattice ball: match the
  // brute-force angle comparison.
  double aperture = kPi / 12.0;
  Surface arc = spherical_cap(2, 1.0, aperture);
  Spectrum ball = generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 10.0));
  ConeFilterResult part = cone_filter(ball, arc, Region::whole(), 1e-3);
  std::int64_t oracle_in = 0;
  for (const Vec& p : ball.points) {
    double n = p.norm();
    // Arc normals point along directions within `aperture` of the +x2 axis.
    if (n == 0.0 || std::abs(p[1]) / n >= std::cos(aperture + 1e-3)) ++oracle_in;
  }
  CHECK(part.inside == oracle_in);
  CHECK(part.inside + part.outside == ball.size());
}

TEST_CASE("cone lower bound: windowed cap stays near the stationary-phase prediction") {
  Surface cap = cap_graph(2, SphereCapHeight{1.0},
                          Box(Vec::Constant(1, -0.35), Vec::Constant(1, 0.35)));
  Window w = bump_window(cap, 0, Box(Vec::Constant(1, -0.3), Vec::Constant(1, 0.3)), 0.25);
  auto radii = spaced_values(10.0, 100.0, 8, true);
  ConeLowerBoundReport rep = cone_lower_bound_check(cap, w, radii, 5);
  CHECK(rep.min_ratio >= 0.5);
  CHECK(rep.min_ratio <= 2.0);
  CHECK(rep.min_scaled_power > 0.0);
}

TEST_CASE("cone lower bound: flat unit window approaches the prediction at high frequency") {
  // A hard-cutoff window is not smooth, so its transform carries endpoint
  // terms of relative size ~ q^{-1/2}; only well inside the asymptotic range
  // does the single-point prediction hold to 20%.
  Surface cap = cap_graph(2, SphereCapHeight{1.0},
                          Box(Vec::Constant(1, -0.35), Vec::Constant(1, 0.35)));
  Window one = window_one(cap, 0);
  auto radii = spaced_values(300.0, 1000.0, 6, true);
  ConeLowerBoundReport rep = cone_lower_bound_check(cap, one, radii, 1);
  CHECK(rep.min_ratio >= 0.8);
  for (const auto& s : rep.samples) CHECK(s.ratio <= 1.2);
}

TEST_CASE("cone filter: axis-line spectrum lies inside a cap's cone") {
  Surface cap = spherical_cap(3, 1.0, kPi / 6.0);
  Spectrum axis = generate_spectrum(SpectrumSpec::axis_line(3, 1.0, 5.0));
  ConeFilterResult r = cone_filter(axis, cap, Region::whole(), 1e-3);
  CHECK(r.outside == 0);
  CHECK(r.inside == axis.size());
}

TEST_CASE("frame bounds: window amplitude scales both bounds linearly") {
  Surface cap = cap_graph(2, SphereCapHeight{1.0},
                          Box(Vec::Constant(1, -0.35), Vec::Constant(1, 0.35)));
  Box support(Vec::Constant(1, -0.3), Vec::Constant(1, 0.3));
  Window full = bump_window(cap, 0, support, 0.25, 1.0);
  Window half = bump_window(cap, 0, support, 0.25, 0.5);
  Spectrum sp = generate_spectrum(
      SpectrumSpec::explicit_list({vec2(0, 0), vec2(1, 0), vec2(-1, 0), vec2(2, 0)}));
  std::vector<Vec> grid = {vec2(0.25, 0), vec2(-0.25, 0), vec2(0.75, 0)};
  FrameEstimate a = frame_bounds_estimate(cap, &full, sp, grid);
  FrameEstimate b = frame_bounds_estimate(cap, &half, sp, grid);
  CHECK(b.alpha_min == doctest::Approx(0.5 * a.alpha_min).epsilon(1e-8));
  CHECK(b.alpha_max == doctest::Approx(0.5 * a.alpha_max).epsilon(1e-8));
}

TEST_CASE("frame bounds: one-dimensional sanity (Lambda = {0}, H = {0})") {
  Surface c = circle(1.0);
  Spectrum sp = generate_spectrum(SpectrumSpec::explicit_list({vec2(0, 0)}));
  FrameEstimate est = frame_bounds_estimate(c, nullptr, sp, {Vec::Zero(2)});
  CHECK(est.alpha_min == doctest::Approx(kTwoPi).epsilon(1e-9));
  CHECK(est.alpha_max == doctest::Approx(kTwoPi).epsilon(1e-9));
}

TEST_CASE("frame bounds: window scaling scales both bounds linearly") {
  Surface cap = cap_graph(2, SphereCapHeight{1.0},
                          Box(Vec::Constant(1, -0.35), Vec::Constant(1, 0.35)));
  Window w_full = bump_window(cap, 0, Box(Vec::Constant(1, -0.3), Vec::Constant(1, 0.3)), 0.25);
  // A scaled window is not in the catalog; emulate by comparing against the
  // window measure's own ratio invariance through explicit spectra.
  Spectrum sp = generate_spectrum(
      SpectrumSpec::explicit_list({vec2(0, 0), vec2(1, 0), vec2(-1, 0), vec2(2, 0)}));
  std::vector<Vec> grid = {vec2(0.25, 0), vec2(-0.25, 0), vec2(0.75, 0)};
  FrameEstimate est = frame_bounds_estimate(cap, &w_full, sp, grid);
  CHECK(est.alpha_min > 0.0);
  CHECK(est.alpha_min <= est.alpha_max);

  // Adding a frequency to Lambda never decreases either bound.
  Spectrum bigger = generate_spectrum(SpectrumSpec::explicit_list(
      {vec2(0, 0), vec2(1, 0), vec2(-1, 0), vec2(2, 0), vec2(-2, 0)}));
  FrameEstimate est2 = frame_bounds_estimate(cap, &w_full, bigger, grid);
  CHECK(est2.alpha_min >= est.alpha_min - 1e-10);
  CHECK(est2.alpha_max >= est.alpha_max - 1e-10);
}

TEST_CASE("frame bounds: nearly coincident test frequencies are refused") {
  Surface c = circle(1.0);
  Spectrum sp = generate_spectrum(SpectrumSpec::lattice_ball(2, 1.0, 2.0));
  std::vector<Vec> grid = {vec2(0, 0), vec2(1e-9, 0)};
  CHECK_THROWS_AS(frame_bounds_estimate(c, nullptr, sp, grid), Error);
}
