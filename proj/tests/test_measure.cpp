#include "core/catalog.hpp"
#include "core/integrator.hpp"
#include "core/reference.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace curveft;

TEST_CASE("total mass: circle and sphere") {
  CHECK(total_mass(circle(1.0)).value == doctest::Approx(kTwoPi).epsilon(1e-12));
  CHECK(total_mass(circle(2.5)).value == doctest::Approx(2.5 * kTwoPi).epsilon(1e-12));
  CHECK(total_mass(sphere(3, 1.0)).value == doctest::Approx(4.0 * kPi).epsilon(1e-9));
  CHECK(total_mass(sphere(3, 2.0)).value == doctest::Approx(16.0 * kPi).epsilon(1e-9));
}

TEST_CASE("total mass: caps, hemisphere halves") {
  // Round cap: 2 pi r^2 (1 - cos alpha).
  double alpha = kPi / 6.0;
  CHECK(total_mass(spherical_cap(3, 1.0, alpha)).value ==
        doctest::Approx(kTwoPi * (1.0 - std::cos(alpha))).epsilon(1e-9));
  // Arc: r * 2 alpha.
  CHECK(total_mass(spherical_cap(2, 1.0, alpha)).value ==
        doctest::Approx(2.0 * alpha).epsilon(1e-12));

  HemispherePair pair = hemisphere_pair(3, 1.0);
  CHECK(total_mass(pair.half).value == doctest::Approx(2.0 * kPi).epsilon(1e-9));
  HemispherePair pair2 = hemisphere_pair(2, 1.0);
  CHECK(total_mass(pair2.half).value == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("total mass: figure1 arc length matches an adaptive oracle") {
  double oracle = reference::adaptive_simpson(
      [](double t) {
        double ap = oracles::fig_ap(t), a = oracles::fig_a(t);
        return std::sqrt(ap * ap + a * a);
      },
      0.0, kTwoPi, 1e-11);
  CHECK(total_mass(figure1_curve()).value == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("total mass: revolution surface matches the 1-D area-of-revolution oracle") {
  // 2 pi int |a| sqrt(a'^2 + b'^2) dt; the |a| kinks make this a good stress
  // of the node-refinement loop.
  double oracle = kTwoPi * reference::adaptive_simpson(
                              [](double t) {
                                double a = oracles::fig_a(t), ap = oracles::fig_ap(t);
                                return std::abs(a) * std::sqrt(ap * ap + a * a);
                              },
                              0.0, kTwoPi, 1e-9);
  // The area element vanishes like |a| where the profile crosses the axis, so
  // the tensor rule converges slowly there; the default tolerance refuses.
  CHECK_THROWS_AS(total_mass(revolution_surface(3)), Error);
  QuadOptions opts;
  opts.fail_tol = 2e-5;
  opts.max_refinements = 14;
  MassResult mass = total_mass(revolution_surface(3), nullptr, opts);
  CHECK(mass.value == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("multiplicity: declared full overlap halves the weight") {
  Surface doubled = circle_double(1.0);
  CHECK(doubled.multiplicity(0) == 2);
  CHECK(doubled.multiplicity(1) == 2);
  CHECK(total_mass(doubled).value == doctest::Approx(kTwoPi).epsilon(1e-12));

  SurfacePoint p = make_surface_point(doubled, 0, Vec::Constant(1, 0.5));
  CHECK(surface_measure_weight(doubled, p) == doctest::Approx(0.5).epsilon(1e-12));

  Surface single = circle(1.0);
  SurfacePoint q = make_surface_point(single, 0, Vec::Constant(1, 0.5));
  CHECK(surface_measure_weight(single, q) == doctest::Approx(1.0).epsilon(1e-12));

  SurfacePoint outside = q;
  outside.u = Vec::Constant(1, -1.0);
  CHECK_THROWS_AS(surface_measure_weight(single, outside), Error);
}

TEST_CASE("graph chart has unit area element at the critical point") {
  Surface cap = cap_graph(3, SphereCapHeight{1.0},
                          Box(Vec::Constant(2, -0.3), Vec::Constant(2, 0.3)));
  SurfacePoint pole = make_surface_point(cap, 0, Vec::Zero(2));
  CHECK(pole.area_element == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("windowed mass is positive and smaller than the full mass") {
  Surface cap = cap_graph(2, SphereCapHeight{1.0},
                          Box(Vec::Constant(1, -0.4), Vec::Constant(1, 0.4)));
  Window w = bump_window(cap, 0, Box(Vec::Constant(1, -0.3), Vec::Constant(1, 0.3)), 0.25);
  double full = total_mass(cap).value;
  double windowed = total_mass(cap, &w).value;
  CHECK(windowed > 0.0);
  CHECK(windowed < full);
}

TEST_CASE("disjoint additivity: chart masses sum to the surface mass") {
  Surface s = sphere(3, 1.0);
  double total = total_mass(s).value;
  double sum = 0.0;
  for (int i = 0; i < s.chart_count(); ++i) {
    std::vector<Chart> one{s.chart(i)};
    sum += total_mass(Surface(std::move(one), OverlapPolicy::Disjoint, {}, "face")).value;
  }
  CHECK(sum == doctest::Approx(total).epsilon(1e-10));
}
