#include "core/verify.hpp"

#include "core/catalog.hpp"
#include "core/fourier.hpp"
#include "core/frame.hpp"
#include "core/reference.hpp"
#include "core/shape.hpp"
#include "core/spectrum.hpp"
#include "core/stationary.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace curveft {

namespace {

struct Check {
  std::ostringstream detail;
  bool pass = true;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (ok ? "[ok] " : "[FAIL] ") << what << "; ";
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Deterministic frequencies in the ball of radius `rmax` (Box-Muller on the
// raw engine output so the stream is platform-stable).
std::vector<Vec> seeded_ball_frequencies(int d, int count, double rmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
  std::vector<Vec> out;
  while (static_cast<int>(out.size()) < count) {
    Vec v(d);
    for (int i = 0; i < d; i += 2) {
      double u1 = std::max(unit(), 1e-16), u2 = unit();
      double r = std::sqrt(-2.0 * std::log(u1));
      v[i] = r * std::cos(kTwoPi * u2);
      if (i + 1 < d) v[i + 1] = r * std::sin(kTwoPi * u2);
    }
    double n = v.norm();
    if (n < 1e-9) continue;
    double radius = rmax * std::pow(unit(), 1.0 / d);
    out.push_back(radius / n * v);
  }
  return out;
}

// --- criterion bodies ---------------------------------------------------------

CriterionResult c1_revolution_curvature(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  const int grid = fast ? 64 : 256;
  double worst = 0.0;
  for (int d : {2, 3, 4}) {
    Surface s = revolution_surface(d);
    const Chart& chart = s.chart(0);
    double max_rel = 0.0;
    for (int k = 0; k < grid; ++k) {
      double theta = (k + 0.5) / grid * kTwoPi;
      Vec u(chart.param_dim());
      u[0] = theta;
      if (d >= 3) u[1] = d == 3 ? 0.7 : 1.0;
      if (d == 4) u[2] = 0.7;
      ShapeData sd = shape_data(chart, u, chart.raw_normal(u));
      double expected = curvature_closed_form_revolution(theta, d);
      double rel = std::abs(std::abs(sd.gaussian_curvature) - expected) / expected;
      max_rel = std::max(max_rel, rel);
    }
    worst = std::max(worst, max_rel);
    chk.require(max_rel <= 1e-8,
                "d=" + std::to_string(d) + " max rel err " + fmt(max_rel) + " <= 1e-8");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  chk.require(secs <= 5.0, "runtime " + fmt(secs) + "s <= 5s");
  return {"revolution-curvature",
          "revolution-surface |K| matches the closed form on a theta grid (d=2,3,4)", chk.pass,
          chk.detail.str(), secs};
}

CriterionResult c2_circle_bessel(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  Surface s = circle(1.0);
  Vec dir(2);
  dir << std::cos(0.3), std::sin(0.3);
  double max_abs = 0.0;
  const int count = fast ? 25 : 100;
  const double qmax = 100.0;
  std::vector<Vec> freqs;
  for (int j = 1; j <= count; ++j) freqs.push_back(j * (qmax / count) * dir);
  FtScanResult scan = ft_scan(s, nullptr, freqs);
  chk.require(scan.failures.empty(), "no quadrature failures");
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    double q = freqs[i].norm();
    max_abs = std::max(max_abs, std::abs(scan.samples[i].value - reference::circle_ft(1.0, q)));
  }
  chk.require(max_abs <= 1e-8, "max |ft - 2*pi*J0(2*pi*q)| = " + fmt(max_abs) + " <= 1e-8");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  chk.require(secs <= 10.0, "runtime " + fmt(secs) + "s <= 10s");
  return {"circle-ft-bessel", "circle transform matches the Bessel oracle up to |xi| = 100",
          chk.pass, chk.detail.str(), secs};
}

CriterionResult c3_sphere_closed_form(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  Surface s = sphere(3, 1.0);
  Vec dir(3);
  dir << 0.36, 0.48, 0.8;
  const int count = fast ? 8 : 25;
  const double qmax = fast ? 20.0 : 50.0;
  std::vector<Vec> freqs;
  freqs.push_back(0.5 * dir);
  for (int j = 1; j <= count; ++j) freqs.push_back(j * (qmax / count) * dir);
  FtScanResult scan = ft_scan(s, nullptr, freqs);
  chk.require(scan.failures.empty(), "no quadrature failures");
  double max_abs = 0.0;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    double q = freqs[i].norm();
    max_abs = std::max(max_abs, std::abs(scan.samples[i].value - reference::sphere3_ft(1.0, q)));
  }
  chk.require(max_abs <= 1e-7,
              "max |ft - 2 sin(2 pi q)/q| = " + fmt(max_abs) + " <= 1e-7 (|xi| <= " + fmt(qmax) +
                  ")");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  chk.require(secs <= 60.0, "runtime " + fmt(secs) + "s <= 60s");
  return {"sphere-ft-closed-form", "sphere (d=3) transform matches the closed form", chk.pass,
          chk.detail.str(), secs};
}

CriterionResult c4_intro_asymptotic(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  for (int d : {2, 3}) {
    if (fast && d == 3) break;
    Surface s = d == 2 ? circle(1.0) : sphere(3, 1.0);
    Vec dir = Vec::Zero(d);
    dir[d - 1] = 1.0;
    double qmax = fast ? 30.0 : 50.0;
    double step = d == 2 ? 1.0 / 16.0 : 0.1;
    std::vector<double> radii;
    for (double q = 10.0; q <= qmax + 1e-9; q += step) radii.push_back(q);
    std::vector<Vec> freqs = ray_frequencies(dir, radii);
    FtScanResult scan = ft_scan(s, nullptr, freqs);
    chk.require(scan.failures.empty(), "d=" + std::to_string(d) + " scan clean");
    std::vector<Complex> values;
    for (const auto& smp : scan.samples) values.push_back(smp.value);
    DecayPhaseFit fit = decay_phase_fit(radii, values, d);
    double want = -0.5 * (d - 1);
    chk.require(std::abs(fit.envelope.slope - want) <= 0.05,
                "d=" + std::to_string(d) + " envelope slope " + fmt(fit.envelope.slope) + " = " +
                    fmt(want) + " +- 0.05");
    chk.require(fit.zero_offset_max_dev <= 0.02,
                "d=" + std::to_string(d) + " zero offsets within 0.02 of (d-1)/8 + 1/4 + k/2 " +
                    "(max dev " + fmt(fit.zero_offset_max_dev) + ")");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {"intro-asymptotic-law",
          "ray scans fit the |xi|^{-(d-1)/2} cos(2 pi (|xi| - (d-1)/8)) law (d=2,3)", chk.pass,
          chk.detail.str(), secs};
}

CriterionResult c5_hemisphere_symmetry(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  for (int d : {2, 3}) {
    HemispherePair pair = hemisphere_pair(d, 1.0);
    auto freqs = seeded_ball_frequencies(d, fast ? 12 : 50, 30.0, 7u * d);
    SymmetryCheckReport rep = hemisphere_symmetry_check(pair.full, pair.half, freqs);
    chk.require(rep.max_deviation <= 1e-7, "d=" + std::to_string(d) + " max |2 Re ft(S+) - ft(S)| = " +
                                               fmt(rep.max_deviation) + " <= 1e-7");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {"hemisphere-symmetry", "central symmetry identity on hemisphere pairs (d=2,3)",
          chk.pass, chk.detail.str(), secs};
}

CriterionResult c6_hemisphere_axis_decay(bool fast) {
  (void)fast;  // the 1-D profile is cheap; both suites use the full range
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  auto radii = spaced_values(10.0, 100.0, 33, true);
  HemisphereProfileReport rep = hemisphere_axis_profile(4, radii);
  chk.require(std::abs(rep.decay_fit.slope + 1.0) <= 0.05,
              "axis decay slope " + fmt(rep.decay_fit.slope) + " = -1 +- 0.05");
  chk.require(rep.scaled_min >= 0.05 && rep.scaled_max <= 0.5,
              "q*|I| in [0.05, 0.5] (measured [" + fmt(rep.scaled_min) + ", " +
                  fmt(rep.scaled_max) + "])");
  chk.require(rep.decay_fit.slope > -1.2, "rate clearly above the sphere's -1.5");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {"hemisphere-axis-decay", "d=4 hemisphere axis profile decays like |xi_d|^{-1}",
          chk.pass, chk.detail.str(), secs};
}

struct CapFixture {
  Surface surface;
  std::unique_ptr<Window> window;
};

CapFixture make_cap_with_window(int d) {
  const int m = d - 1;
  Box base(Vec::Constant(m, -0.35), Vec::Constant(m, 0.35));
  CapFixture fx{cap_graph(d, SphereCapHeight{1.0}, base), nullptr};
  Box support(Vec::Constant(m, -0.3), Vec::Constant(m, 0.3));
  fx.window = std::make_unique<Window>(bump_window(fx.surface, 0, support, 0.25));
  return fx;
}

CriterionResult c7_sp_remainder(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  for (int d : {2, 3}) {
    if (fast && d == 3) break;
    CapFixture cap = make_cap_with_window(d);
    Vec axis = Vec::Zero(d);
    axis[d - 1] = 1.0;
    auto radii = spaced_values(10.0, fast ? 60.0 : 100.0, fast ? 10 : 16, true);
    AsymptoticCompareReport rep = asymptotic_compare(cap.surface, cap.window.get(), axis, radii);
    chk.require(rep.deviation_fit.slope <= -0.8,
                "d=" + std::to_string(d) + " remainder slope " + fmt(rep.deviation_fit.slope) +
                    " <= -0.8");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {"sp-remainder-decay",
          "stationary phase vs quadrature: normalized deviation decays (cap windows, d=2,3)",
          chk.pass, chk.detail.str(), secs};
}

CriterionResult c8_cone_lower_bound(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  for (int d : {2, 3}) {
    if (fast && d == 3) break;
    CapFixture cap = make_cap_with_window(d);
    auto radii = spaced_values(10.0, 100.0, fast ? 6 : 9, true);
    ConeLowerBoundReport rep =
        cone_lower_bound_check(cap.surface, *cap.window, radii, fast ? 3 : (d == 2 ? 5 : 9));
    chk.require(rep.min_ratio >= 0.5, "d=" + std::to_string(d) + " min |ft|^2 |l|^{d-1} / prediction = " +
                                          fmt(rep.min_ratio) + " >= 0.5");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {"cone-lower-bound",
          "in-cone frequencies keep |psi dsigma^(lambda)|^2 |lambda|^{d-1} near the prediction",
          chk.pass, chk.detail.str(), secs};
}

CriterionResult c9_divergence_dichotomy(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  double r_big = fast ? 50.0 : 100.0;
  auto plane = divergence_partial_sum(SpectrumSpec::lattice_ball(2, 1.0, r_big), 2, {r_big});
  chk.require(std::abs(plane.growth[0] - 2.0) <= 0.1,
              "Z^2 growth S(2R)/S(R) = " + fmt(plane.growth[0]) + " = 2 +- 0.1 at R=" +
                  fmt(r_big));
  double r_axis = fast ? 500.0 : 1000.0;
  auto axis = divergence_partial_sum(SpectrumSpec::axis_line(3, 1.0, r_axis), 3, {r_axis});
  double target = kPi * kPi / 3.0;
  double tol = fast ? 5e-3 : 2e-3;
  chk.require(std::abs(axis.sums[0] - target) <= tol,
              "axis spectrum sum " + fmt(axis.sums[0]) + " within " + fmt(tol) + " of pi^2/3");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {"divergence-dichotomy", "partial sums: plane lattice diverges, axis line converges",
          chk.pass, chk.detail.str(), secs};
}

CriterionResult c10_frame_trends(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;

  auto centered_line = [](int count, double scale) {
    // +-0.5, -+1.5, ... times scale, innermost first so prefixes nest.
    std::vector<Vec> out;
    for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
      for (double s : {+1.0, -1.0}) {
        Vec v = Vec::Zero(2);
        v[0] = s * (k + 0.5) * scale;
        out.push_back(v);
        if (static_cast<int>(out.size()) == count) break;
      }
    }
    return out;
  };
  (void)fast;  // the sweep is cheap and the collapse only shows by size 64
  std::vector<int> sizes = {8, 16, 32, 64};
  const int max_size = sizes.back();

  // Cap + base-line spectrum: alpha_min must stay bounded below.
  CapFixture cap = make_cap_with_window(2);
  Spectrum base_line = generate_spectrum(SpectrumSpec::axis_line(2, 1.0, 96.0, /*axis=*/0));
  auto cap_grid = centered_line(max_size, 2.5);
  auto cap_sweep = frame_bounds_sweep(cap.surface, cap.window.get(), base_line, cap_grid, sizes);
  double c_ref = cap_sweep.front().alpha_min;
  chk.require(c_ref > 0.01, "cap alpha_min at size 8 = " + fmt(c_ref) + " > 0.01");
  for (const auto& est : cap_sweep)
    chk.require(est.alpha_min >= 0.5 * c_ref,
                "cap alpha_min(" + std::to_string(est.h_size) + ") = " + fmt(est.alpha_min) +
                    " >= " + fmt(0.5 * c_ref));

  // Full circle + cone-restricted spectrum: alpha_min must collapse.
  Surface circ = circle(1.0);
  Vec cone_axis(2);
  cone_axis << 0.0, 1.0;
  Spectrum cone = generate_spectrum(SpectrumSpec::cone_lattice(cone_axis, kPi / 12.0, 1.0, 40.0));
  auto circ_grid = centered_line(max_size, 1.0);
  auto circ_sweep = frame_bounds_sweep(circ, nullptr, cone, circ_grid, sizes);
  double first = circ_sweep.front().alpha_min;
  double last = circ_sweep.back().alpha_min;
  double needed_drop = 10.0;
  chk.require(last <= first / needed_drop,
              "circle alpha_min drops " + fmt(first / std::max(last, 1e-300)) + "x >= " +
                  fmt(needed_drop) + "x (sizes " + std::to_string(sizes.front()) + "->" +
                  std::to_string(sizes.back()) + ")");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Check budget;
  budget.pass = chk.pass;
  budget.detail << chk.detail.str();
  budget.require(secs <= 300.0, "runtime " + fmt(secs) + "s <= 300s");
  return {"frame-bound-trends",
          "cap keeps alpha_min bounded below; cone-restricted circle spectrum collapses",
          budget.pass, budget.detail.str(), secs};
}

CriterionResult c11_coverage(bool fast) {
  auto t0 = std::chrono::steady_clock::now();
  Check chk;
  double res = fast ? kPi / 32.0 : kPi / 64.0;

  Surface fig = figure1_curve();
  CoverageReport figc = normal_cone_coverage(fig, Region::whole(), res);
  chk.require(figc.fraction >= 0.999, "figure1 coverage " + fmt(figc.fraction) + " = 1.0");

  Surface cap = spherical_cap(3, 1.0, kPi / 6.0);
  CoverageReport capc = normal_cone_coverage(cap, Region::whole(), res);
  double expect = 1.0 - std::cos(kPi / 6.0);
  double tol = fast ? 0.015 : 0.01;
  chk.require(std::abs(capc.fraction - expect) <= tol,
              "pi/6 cap coverage " + fmt(capc.fraction) + " = " + fmt(expect) + " +- " + fmt(tol));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {"normal-cone-coverage", "Gauss-map coverage: full for figure1, solid-angle for the cap",
          chk.pass, chk.detail.str(), secs};
}

}  // namespace

VerifyReport run_verification(const std::string& suite) {
  if (suite != "fast" && suite != "full")
    fail(ErrorCode::InvalidArgument, "verify: unknown suite '" + suite + "' (use fast|full)");
  const bool fast = suite == "fast";
  auto t0 = std::chrono::steady_clock::now();

  VerifyReport report;
  report.suite = suite;
  report.results.push_back(c1_revolution_curvature(fast));
  report.results.push_back(c2_circle_bessel(fast));
  report.results.push_back(c3_sphere_closed_form(fast));
  report.results.push_back(c4_intro_asymptotic(fast));
  report.results.push_back(c5_hemisphere_symmetry(fast));
  report.results.push_back(c6_hemisphere_axis_decay(fast));
  report.results.push_back(c7_sp_remainder(fast));
  report.results.push_back(c8_cone_lower_bound(fast));
  report.results.push_back(c9_divergence_dichotomy(fast));
  report.results.push_back(c10_frame_trends(fast));
  report.results.push_back(c11_coverage(fast));

  report.all_pass = true;
  for (const auto& r : report.results) report.all_pass = report.all_pass && r.pass;
  report.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace curveft
