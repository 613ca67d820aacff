#include "core/catalog.hpp"
#include "core/shape.hpp"

#include <doctest.h>

#include <cmath>

using namespace curveft;

TEST_CASE("unit sphere: principal curvatures +-1, K = +1, signature follows orientation") {
  Surface s = sphere(3, 1.0);
  Vec u(2);
  u << 0.15, -0.25;
  const Chart& chart = s.chart(0);
  Vec outward = chart.position(u);  // radial direction

  ShapeData out = shape_data(chart, u, outward);
  CHECK(out.gaussian_curvature == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(out.principal_curvatures[0] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(out.principal_curvatures[1] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(out.signature == -2);

  ShapeData in = shape_data(chart, u, -outward);
  CHECK(in.gaussian_curvature == doctest::Approx(1.0).epsilon(1e-10));  // d-1 even
  CHECK(in.principal_curvatures[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(in.signature == 2);
  // Orientation flip negates II and the principal curvatures.
  CHECK((in.second_form + out.second_form).norm() <= 1e-10);
}

TEST_CASE("spheres: |K| = r^{-(d-1)} on a grid") {
  for (double r : {0.5, 1.0, 3.0}) {
    Surface c = circle(r);
    for (double t : {0.3, 1.7, 4.4}) {
      ShapeData sd = shape_data(c.chart(0), Vec::Constant(1, t), c.chart(0).raw_normal(Vec::Constant(1, t)));
      CHECK(std::abs(sd.gaussian_curvature) == doctest::Approx(1.0 / r).epsilon(1e-9));
    }
    Surface s = sphere(3, r);
    for (int ci : {0, 3}) {
      for (double a : {-0.6, 0.2}) {
        Vec u = Vec::Constant(2, a);
        ShapeData sd = shape_data(s.chart(ci), u, s.chart(ci).raw_normal(u));
        CHECK(std::abs(sd.gaussian_curvature) == doctest::Approx(1.0 / (r * r)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("figure1 curvature at t = 0 is exactly 1") {
  Surface fig = figure1_curve();
  Vec u = Vec::Zero(1);
  ShapeData sd = shape_data(fig.chart(0), u, fig.chart(0).raw_normal(u));
  CHECK(std::abs(sd.gaussian_curvature) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("revolution closed form: spot values and grid cross-validation") {
  CHECK(curvature_closed_form_revolution(0.0, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(curvature_closed_form_revolution(kPi, 3) == doctest::Approx(7.0).epsilon(1e-12));

  for (int d : {2, 3, 4}) {
    Surface s = revolution_surface(d);
    const Chart& chart = s.chart(0);
    double max_rel = 0.0;
    for (int k = 0; k < 64; ++k) {
      double theta = (k + 0.5) / 64.0 * kTwoPi;
      Vec u(chart.param_dim());
      u[0] = theta;
      if (d >= 3) u[1] = d == 3 ? 0.7 : 1.1;
      if (d == 4) u[2] = 0.6;
      ShapeData sd = shape_data(chart, u, chart.raw_normal(u));
      double expected = curvature_closed_form_revolution(theta, d);
      max_rel = std::max(max_rel,
                         std::abs(std::abs(sd.gaussian_curvature) - expected) / expected);
    }
    CAPTURE(d);
    CHECK(max_rel <= 1e-8);
  }
}

TEST_CASE("revolution surface at theta = 0: |K| = 1/3 (d=3)") {
  Surface s = revolution_surface(3);
  Vec u(2);
  u << 0.0, 0.9;
  ShapeData sd = shape_data(s.chart(0), u, s.chart(0).raw_normal(u));
  CHECK(std::abs(sd.gaussian_curvature) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("paraboloid graph: signature and K at the vertex") {
  Vec k(2);
  k << 2.0, -3.0;
  Surface s = cap_graph(3, ParaboloidHeight{k}, Box(Vec::Constant(2, -0.2), Vec::Constant(2, 0.2)));
  Vec e3(3);
  e3 << 0.0, 0.0, 1.0;
  ShapeData sd = shape_data(s.chart(0), Vec::Zero(2), e3);
  CHECK(sd.gaussian_curvature == doctest::Approx(-6.0).epsilon(1e-12));
  CHECK(sd.signature == 0);
  CHECK(sd.principal_curvatures[0] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(sd.principal_curvatures[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("orientation orthogonal to the normal line is rejected") {
  Surface c = circle(1.0);
  Vec u = Vec::Constant(1, 0.4);
  Mat jac = c.chart(0).jacobian(u);
  Vec tangent = jac.col(0);
  CHECK_THROWS_AS(shape_data(c.chart(0), u, tangent), Error);
}

TEST_CASE("|K| is orientation independent") {
  Surface s = revolution_surface(3);
  Vec u(2);
  u << 2.2, 1.3;
  Vec n = s.chart(0).raw_normal(u);
  double k1 = shape_data(s.chart(0), u, n).gaussian_curvature;
  double k2 = shape_data(s.chart(0), u, -n).gaussian_curvature;
  CHECK(std::abs(k1) == doctest::Approx(std::abs(k2)).epsilon(1e-12));
}
