#include "core/catalog.hpp"
#include "core/fourier.hpp"
#include "core/gauss_legendre.hpp"
#include "core/reference.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace curveft;

namespace {
Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

struct CapFixture {
  Surface surface;
  Window window;
};
CapFixture cap2() {
  Surface s = cap_graph(2, SphereCapHeight{1.0}, Box(Vec::Constant(1, -0.35), Vec::Constant(1, 0.35)));
  Window w = bump_window(s, 0, Box(Vec::Constant(1, -0.3), Vec::Constant(1, 0.3)), 0.25);
  return {std::move(s), std::move(w)};
}
}  // namespace

TEST_CASE("ft at zero equals the total mass (<= 1e-10 relative)") {
  struct Case {
    Surface s;
    const Window* w;
  };
  Surface circle1 = circle(1.0);
  Surface sphere3 = sphere(3, 1.0);
  Surface fig = figure1_curve();
  CapFixture cap = cap2();
  std::vector<Case> cases;
  cases.push_back({circle1, nullptr});
  cases.push_back({sphere3, nullptr});
  cases.push_back({fig, nullptr});
  cases.push_back({cap.surface, &cap.window});
  for (auto& c : cases) {
    double mass = total_mass(c.s, c.w).value;
    Complex v = ft_point(c.s, c.w, Vec::Zero(c.s.ambient_dim())).value;
    CHECK(std::abs(v - Complex(mass, 0)) <= 1e-10 * mass);
  }
}

TEST_CASE("circle transform matches the Bessel oracle") {
  Surface c = circle(1.0);
  Vec dir = vec2(std::cos(0.3), std::sin(0.3));
  for (double q : {0.7, 3.0, 11.5, 40.0, 77.0, 100.0}) {
    FourierSample smp = ft_point(c, nullptr, q * dir);
    CHECK(std::abs(smp.value - Complex(reference::circle_ft(1.0, q), 0)) <= 1e-8);
  }
}

TEST_CASE("sphere transform matches the closed form, including |xi| = 1/2") {
  Surface s = sphere(3, 1.0);
  Vec dir = vec3(0.36, 0.48, 0.8);
  CHECK(std::abs(ft_point(s, nullptr, 0.5 * dir).value) <= 1e-10);
  for (double q : {1.3, 7.7, 20.2}) {
    FourierSample smp = ft_point(s, nullptr, q * dir);
    CHECK(std::abs(smp.value - Complex(reference::sphere3_ft(1.0, q), 0)) <= 1e-8);
  }
}

TEST_CASE("conjugate symmetry holds exactly on +-xi pairs") {
  Surface fig = figure1_curve();
  std::vector<Vec> freqs;
  for (double q : {1.7, 6.3, 14.9}) {
    freqs.push_back(q * vec2(0.8, 0.6));
    freqs.push_back(-q * vec2(0.8, 0.6));
  }
  FtScanResult scan = ft_scan(fig, nullptr, freqs);
  REQUIRE(scan.failures.empty());
  for (std::size_t i = 0; i < freqs.size(); i += 2) {
    CHECK(scan.samples[i].value.real() == doctest::Approx(scan.samples[i + 1].value.real()));
    CHECK(scan.samples[i].value.imag() == doctest::Approx(-scan.samples[i + 1].value.imag()));
  }
}

TEST_CASE("sphere scan: rotation invariance of the modulus") {
  Surface s = sphere(3, 1.0);
  Vec d1 = vec3(1, 0, 0), d2 = vec3(0.482, -0.7, 0.527).normalized();
  for (double q : {4.3, 12.1}) {
    double a = std::abs(ft_point(s, nullptr, q * d1).value);
    double b = std::abs(ft_point(s, nullptr, q * d2).value);
    CHECK(std::abs(a - b) <= 1e-8);
  }
}

TEST_CASE("empty scan returns an empty list") {
  Surface c = circle(1.0);
  FtScanResult scan = ft_scan(c, nullptr, {});
  CHECK(scan.samples.empty());
  CHECK(scan.failures.empty());
}

TEST_CASE("scan records per-point failures and continues") {
  Surface c = circle(1.0);
  QuadOptions tight;
  tight.max_nodes_per_axis = 64;  // high frequencies cannot be resolved
  std::vector<Vec> freqs = {vec2(0.1, 0.0), vec2(500.0, 0.0), vec2(0.2, 0.0)};
  FtScanResult scan = ft_scan(c, nullptr, freqs, tight);
  REQUIRE(scan.failures.size() == 1);
  CHECK(scan.failures[0].index == 1);
  CHECK(std::abs(scan.samples[0].value) > 0.0);
  CHECK(std::abs(scan.samples[2].value) > 0.0);
}

TEST_CASE("doubling the nodes moves a sample by at most 10x its error estimate") {
  // The figure1 chart runs ~5.8x faster than unit speed, so it also exercises
  // the speed factor in the node rule.
  Surface circle1 = circle(1.0);
  Surface fig = figure1_curve();
  QuadOptions opts;
  for (const Surface* s : {&circle1, &fig}) {
    for (double q : {3.0, 21.0, 60.0}) {
      Vec xi = q * vec2(0.6, 0.8);
      FourierSample smp = ft_point(*s, nullptr, xi, opts);
      std::vector<std::vector<int>> doubled(1);
      doubled[0] = nodes_for_chart(s->chart(0), s->chart(0).domain(), q, opts);
      for (int& n : doubled[0]) n = ladder_round_up(2 * n);
      FourierSample fine = ft_point_with_nodes(*s, nullptr, xi, doubled);
      CHECK(std::abs(fine.value - smp.value) <= 10.0 * smp.est_error + 1e-12);
    }
  }
}

TEST_CASE("upper-bound law: |ft| * q^{(d-1)/2} is stable under refinement") {
  Surface c = circle(1.0);
  QuadOptions opts;
  double sup = 0.0, sup_refined = 0.0;
  for (int i = 0; i < 16; ++i) {
    double q = 10.0 + i * 6.0;
    Vec xi = q * vec2(0.6, 0.8);
    double a = std::abs(ft_point(c, nullptr, xi, opts).value) * std::sqrt(q);
    std::vector<std::vector<int>> finer(1);
    finer[0] = nodes_for_chart(c.chart(0), c.chart(0).domain(), q, opts);
    for (int& n : finer[0]) n = ladder_round_up(n + 1);
    double b = std::abs(ft_point_with_nodes(c, nullptr, xi, finer).value) * std::sqrt(q);
    sup = std::max(sup, a);
    sup_refined = std::max(sup_refined, b);
  }
  CHECK(sup == doctest::Approx(sup_refined).epsilon(1e-9));
  CHECK(sup < 10.0);
}

TEST_CASE("local lower bound: ball-averaged |ft|^2 * R^{d-1} stays in a positive band") {
  std::mt19937_64 rng(11);
  auto unit = [&]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
  for (int d : {2, 3}) {
    Surface s = d == 2 ? circle(1.0) : sphere(3, 1.0);
    for (double big_r : {10.0, 30.0, 50.0}) {
      double mean = 0.0;
      const int m = 24;
      for (int i = 0; i < m; ++i) {
        Vec xi = Vec::Zero(d);
        xi[0] = big_r;
        for (int c = 0; c < d; ++c) xi[c] += 2.0 * unit() - 1.0;
        // d=2 runs the actual quadrature; d=3 uses the (separately verified)
        // closed form to keep this test quick.
        double a = d == 2 ? std::abs(ft_point(s, nullptr, xi).value)
                          : reference::sphere3_ft(1.0, xi.norm());
        mean += a * a / m;
      }
      double scaled = mean * std::pow(big_r, d - 1);
      CHECK(scaled > 0.8);
      CHECK(scaled < 3.5);
    }
  }
}

TEST_CASE("stationary phase: sphere sum reproduces the closed form") {
  Surface s = sphere(3, 1.0);
  for (double q : {6.3, 10.25, 17.8}) {
    Vec xi = q * vec3(0.48, -0.6, 0.64).normalized();
    StationaryData sd = stationary_phase_eval(s, nullptr, xi);
    REQUIRE(sd.terms.size() == 2);
    CHECK(std::abs(sd.value - Complex(reference::sphere3_ft(1.0, q), 0)) <= 1e-6);
    // Per-point modulus |K|^{-1/2} psi |xi|^{-(d-1)/2}.
    for (const auto& t : sd.terms)
      CHECK(std::abs(t.term) ==
            doctest::Approx(t.window_value / std::sqrt(t.abs_curvature) / q).epsilon(1e-9));
  }
}

TEST_CASE("stationary phase: windowed cap has a single leading point") {
  CapFixture cap = cap2();
  Vec axis = vec2(0, 1);
  double q = 30.0;
  StationaryData sd = stationary_phase_eval(cap.surface, &cap.window, q * axis);
  REQUIRE(sd.terms.size() == 1);
  double psi = cap.window.value(Vec::Zero(1));
  CHECK(std::abs(sd.value) == doctest::Approx(psi / std::sqrt(q)).epsilon(1e-9));

  // Frequency outside the window's normal cone: empty sum, zero value.
  Vec sideways = vec2(1, 0.05).normalized();
  StationaryData off = stationary_phase_eval(cap.surface, &cap.window, q * sideways);
  CHECK(off.terms.empty());
  CHECK(std::abs(off.value) == 0.0);
}

TEST_CASE("stationary phase rejects |xi| below the asymptotic threshold") {
  Surface s = sphere(3, 1.0);
  CHECK_THROWS_AS(stationary_phase_eval(s, nullptr, vec3(0, 0, 2)), Error);
}

TEST_CASE("stationary phase names degenerate (zero-curvature) points") {
  Surface flat = flat_segment(2.0);
  CHECK_THROWS_WITH_AS(stationary_phase_eval(flat, nullptr, vec2(0, 20)),
                       doctest::Contains("degenerate"), Error);
}

TEST_CASE("asymptotic compare: circle remainder decays one order faster") {
  Surface c = circle(1.0);
  auto radii = spaced_values(10.0, 100.0, 24, true);
  AsymptoticCompareReport rep = asymptotic_compare(c, nullptr, vec2(1, 0), radii);
  CHECK(rep.deviation_fit.slope == doctest::Approx(-1.0).epsilon(0.2));
}

TEST_CASE("asymptotic compare: sphere leading term is exact up to quadrature error") {
  Surface s = sphere(3, 1.0);
  auto radii = spaced_values(10.0, 40.0, 10, true);
  AsymptoticCompareReport rep = asymptotic_compare(s, nullptr, vec3(0, 0, 1), radii);
  for (const auto& row : rep.rows) CHECK(row.abs_dev <= 1e-6);
}

TEST_CASE("asymptotic compare: cap window remainder slope") {
  CapFixture cap = cap2();
  auto radii = spaced_values(10.0, 100.0, 16, true);
  AsymptoticCompareReport rep = asymptotic_compare(cap.surface, &cap.window, vec2(0, 1), radii);
  CHECK(rep.deviation_fit.slope <= -0.8);
}

TEST_CASE("hemisphere axis integral: closed form (d=3) and Wallis values (q=0)") {
  for (double q : {0.8, 5.5, 21.0}) {
    Complex got = hemisphere_axis_integral(3, q);
    CHECK(std::abs(got - reference::hemisphere3_axis_integral(q)) <= 1e-10);
  }
  for (int d : {2, 3, 4, 5, 6}) {
    Complex at0 = hemisphere_axis_integral(d, 0.0);
    CHECK(std::abs(at0 - Complex(reference::wallis(d - 2), 0)) <= 1e-12);
  }
}

TEST_CASE("hemisphere axis profile: d=4 decays like 1/q with bounded q|I|") {
  auto radii = spaced_values(10.0, 100.0, 33, true);
  HemisphereProfileReport rep = hemisphere_axis_profile(4, radii);
  CHECK(rep.decay_fit.slope == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(rep.scaled_min > 0.05);
  CHECK(rep.scaled_max < 0.5);
}

TEST_CASE("hemisphere surface transform on the axis matches |S^{d-2}| times the integral") {
  HemispherePair pair = hemisphere_pair(3, 1.0);
  for (double q : {2.3, 9.1}) {
    Complex surf = ft_point(pair.half, nullptr, vec3(0, 0, q)).value;
    Complex line = hemisphere_axis_integral(3, q) * reference::unit_sphere_area(1);
    CHECK(std::abs(surf - line) <= 1e-8);
  }
}

TEST_CASE("hemisphere symmetry identity") {
  std::mt19937_64 rng(3);
  auto unit = [&]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
  for (int d : {2, 3}) {
    HemispherePair pair = hemisphere_pair(d, 1.0);
    std::vector<Vec> freqs;
    for (int i = 0; i < (d == 2 ? 50 : 20); ++i) {
      Vec xi(d);
      for (int c = 0; c < d; ++c) xi[c] = 60.0 * unit() - 30.0;
      freqs.push_back(xi);
    }
    SymmetryCheckReport rep = hemisphere_symmetry_check(pair.full, pair.half, freqs);
    CHECK(rep.max_deviation <= (d == 2 ? 1e-8 : 1e-7));
  }
  // xi = 0 mass identity: 2 * (2 pi) - 4 pi = 0.
  HemispherePair pair = hemisphere_pair(3, 1.0);
  SymmetryCheckReport zero = hemisphere_symmetry_check(pair.full, pair.half, {Vec::Zero(3)});
  CHECK(zero.max_deviation <= 1e-9);
}

TEST_CASE("decay/phase fit: circle follows the d=2 law") {
  Surface c = circle(1.0);
  std::vector<double> radii;
  for (double q = 10.0; q <= 50.0; q += 1.0 / 16.0) radii.push_back(q);
  FtScanResult scan = ft_scan(c, nullptr, ray_frequencies(vec2(1, 0), radii));
  REQUIRE(scan.failures.empty());
  std::vector<Complex> values;
  for (const auto& s : scan.samples) values.push_back(s.value);
  DecayPhaseFit fit = decay_phase_fit(radii, values, 2);
  CHECK(fit.envelope.slope == doctest::Approx(-0.5).epsilon(0.1));
  CHECK(fit.zero_offset_max_dev <= 0.02);
  CHECK(fit.zeros.size() > 50);
}

TEST_CASE("decay/phase fit: constant samples are rejected") {
  std::vector<double> q;
  std::vector<Complex> v;
  for (int i = 0; i < 40; ++i) {
    q.push_back(10.0 + i);
    v.push_back(Complex(1.0, 0.0));
  }
  CHECK_THROWS_AS(decay_phase_fit(q, v, 2), Error);
}

TEST_CASE("frequency grids are deterministic and sized correctly") {
  auto ray = ray_frequencies(vec2(0, 2), {1.0, 2.0, 3.0});
  REQUIRE(ray.size() == 3);
  CHECK(ray[2][1] == doctest::Approx(3.0));
  auto grid = grid_frequencies(vec2(0, 0), vec2(1, 1), {3, 2});
  CHECK(grid.size() == 6);
  CHECK(spaced_values(1.0, 100.0, 3, true)[1] == doctest::Approx(10.0));
}
