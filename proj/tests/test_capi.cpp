// Exercises the shared-library C interface end to end: opaque handles, error
// codes, thread-local messages, JSON round trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curveft.h>

#include <cmath>
#include <string>
#include <vector>

namespace {
constexpr double kTau = 6.283185307179586;

struct SurfaceHandle {
  curveft_surface* ptr = nullptr;
  explicit SurfaceHandle(const std::string& json) {
    REQUIRE(curveft_surface_create(json.c_str(), &ptr) == CURVEFT_OK);
  }
  ~SurfaceHandle() { curveft_surface_destroy(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  curveft_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("surface lifecycle and metadata") {
  SurfaceHandle circle(R"({"kind": "circle", "params": {"r": 1.0}})");
  int d = 0, charts = 0;
  CHECK(curveft_surface_dim(circle.ptr, &d) == CURVEFT_OK);
  CHECK(d == 2);
  CHECK(curveft_surface_chart_count(circle.ptr, &charts) == CURVEFT_OK);
  CHECK(charts == 1);
  char* name = nullptr;
  CHECK(curveft_surface_name(circle.ptr, &name) == CURVEFT_OK);
  CHECK(take(name) == "circle");
}

TEST_CASE("errors carry codes and messages") {
  curveft_surface* s = nullptr;
  CHECK(curveft_surface_create("{not json", &s) == CURVEFT_ERR_PARSE);
  CHECK(std::string(curveft_last_error()).size() > 0);
  CHECK(curveft_surface_create(R"({"kind": "moebius", "params": {}})", &s) ==
        CURVEFT_ERR_PARSE);
  CHECK(curveft_surface_create(nullptr, &s) == CURVEFT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(curveft_status_name(CURVEFT_ERR_PARSE)) == "parse_error");
}

TEST_CASE("validation: pass and fail paths") {
  SurfaceHandle circle(R"({"kind": "circle", "params": {"r": 1.0}})");
  char* report = nullptr;
  CHECK(curveft_surface_validate(circle.ptr, 32, &report) == CURVEFT_OK);
  std::string rep = take(report);
  CHECK(rep.find("\"pass\":true") != std::string::npos);

  SurfaceHandle flat(R"({"kind": "flat_segment", "params": {"length": 2.0}})");
  report = nullptr;
  CHECK(curveft_surface_validate(flat.ptr, 32, &report) == CURVEFT_ERR_VALIDATION);
  CHECK(take(report).find("\"pass\":false") != std::string::npos);
}

TEST_CASE("mass and transform values through the C interface") {
  SurfaceHandle circle(R"({"kind": "circle", "params": {"r": 1.0}})");
  double mass = 0.0, err = 0.0;
  CHECK(curveft_total_mass(circle.ptr, nullptr, &mass, &err) == CURVEFT_OK);
  CHECK(mass == doctest::Approx(kTau).epsilon(1e-10));

  double xi[2] = {3.0, 0.0};
  double re = 0.0, im = 0.0, est = 0.0;
  int64_t nodes = 0;
  CHECK(curveft_ft_point(circle.ptr, nullptr, xi, &re, &im, &est, &nodes) == CURVEFT_OK);
  CHECK(nodes > 0);
  CHECK(std::abs(im) < 1e-10);

  // Scan: shape and failure flags.
  std::vector<double> freqs = {0.0, 0.0, 1.0, 0.0, 0.0, 2.0};
  std::vector<double> sre(3), sim(3), serr(3);
  std::vector<int64_t> snodes(3);
  std::vector<int> failed(3);
  CHECK(curveft_ft_scan(circle.ptr, nullptr, freqs.data(), 3, sre.data(), sim.data(), serr.data(),
                        snodes.data(), failed.data()) == CURVEFT_OK);
  CHECK(sre[0] == doctest::Approx(kTau).epsilon(1e-10));
  CHECK(failed[0] + failed[1] + failed[2] == 0);
}

TEST_CASE("windows, stationary points, cones") {
  SurfaceHandle cap(
      R"({"kind": "cap_graph", "params": {"d": 2,
          "height": {"kind": "sphere", "r": 1.0},
          "box": {"lo": [-0.35], "hi": [0.35]}}})");
  curveft_window* w = nullptr;
  REQUIRE(curveft_window_create(
              cap.ptr,
              R"({"kind": "bump", "chart": 0, "support": {"lo": [-0.3], "hi": [0.3]}, "floor": 0.25})",
              &w) == CURVEFT_OK);

  double dir[2] = {0.0, 1.0};
  int count = 0, flags = 0, sig = 0;
  double params[4], positions[8], curvature[4], wval[4];
  int sigs[4];
  CHECK(curveft_stationary_points(cap.ptr, w, 0, dir, 4, &count, params, positions, curvature,
                                  sigs, wval, &flags) == CURVEFT_OK);
  CHECK(count == 1);
  CHECK(wval[0] == doctest::Approx(1.0).epsilon(1e-12));

  double u0[1] = {0.0};
  double k = 0.0, normal[2], kappas[1];
  CHECK(curveft_shape_data(cap.ptr, 0, u0, dir, &k, &sig, normal, kappas) == CURVEFT_OK);
  CHECK(std::abs(k) == doctest::Approx(1.0).epsilon(1e-10));

  int member = 0;
  double angle = 0.0;
  CHECK(curveft_cone_membership(cap.ptr, w, 1, dir, 1e-3, &member, &angle) == CURVEFT_OK);
  CHECK(member == 1);
  double sideways[2] = {1.0, 0.0};
  CHECK(curveft_cone_membership(cap.ptr, w, 1, sideways, 1e-3, &member, &angle) == CURVEFT_OK);
  CHECK(member == 0);

  double spre = 0.0, spim = 0.0;
  int npts = 0;
  double xi[2] = {0.0, 20.0};
  CHECK(curveft_sp_eval(cap.ptr, w, xi, &spre, &spim, &npts) == CURVEFT_OK);
  CHECK(npts == 1);
  CHECK(std::hypot(spre, spim) == doctest::Approx(1.0 / std::sqrt(20.0)).epsilon(1e-6));

  curveft_window_destroy(w);
}

TEST_CASE("spectra and divergence sums") {
  curveft_spectrum* sp = nullptr;
  REQUIRE(curveft_spectrum_create(R"({"kind": "lattice_ball", "spacing": 1.0, "radius": 2.5})", 2,
                                  &sp) == CURVEFT_OK);
  int64_t size = 0;
  CHECK(curveft_spectrum_size(sp, &size) == CURVEFT_OK);
  CHECK(size == 21);
  std::vector<double> pts(size * 2);
  CHECK(curveft_spectrum_points(sp, pts.data()) == CURVEFT_OK);
  CHECK(pts[0] == 0.0);  // sorted: 0 first
  curveft_spectrum_destroy(sp);

  double radii[1] = {1000.0};
  double sums[1], growth[1];
  CHECK(curveft_divergence_sums(R"({"kind": "axis_line", "step": 1.0, "radius": 1000.0})", 3, 3,
                                radii, 1, sums, growth) == CURVEFT_OK);
  CHECK(std::abs(sums[0] - 3.2898681) < 2e-3);
}

TEST_CASE("frame bounds: one-dimensional identity") {
  SurfaceHandle circle(R"({"kind": "circle", "params": {"r": 1.0}})");
  curveft_spectrum* sp = nullptr;
  REQUIRE(curveft_spectrum_create(R"({"kind": "explicit", "points": [[0.0, 0.0]]})", 2, &sp) ==
          CURVEFT_OK);
  double grid[2] = {0.0, 0.0};
  double amin = 0.0, amax = 0.0, cond = 0.0;
  CHECK(curveft_frame_bounds(circle.ptr, nullptr, sp, grid, 1, &amin, &amax, &cond) == CURVEFT_OK);
  CHECK(amin == doctest::Approx(kTau).epsilon(1e-9));
  CHECK(amax == doctest::Approx(kTau).epsilon(1e-9));
  curveft_spectrum_destroy(sp);
}

TEST_CASE("hemisphere pair and axis profile") {
  curveft_surface *full = nullptr, *half = nullptr;
  REQUIRE(curveft_hemisphere_create(R"({"kind": "hemisphere", "params": {"d": 3, "r": 1.0}})",
                                    &full, &half) == CURVEFT_OK);
  double mf = 0.0, mh = 0.0;
  CHECK(curveft_total_mass(full, nullptr, &mf, nullptr) == CURVEFT_OK);
  CHECK(curveft_total_mass(half, nullptr, &mh, nullptr) == CURVEFT_OK);
  CHECK(mf == doctest::Approx(2.0 * mh).epsilon(1e-8));
  curveft_surface_destroy(full);
  curveft_surface_destroy(half);

  double q[2] = {0.0, 10.0};
  double re[2], im[2];
  CHECK(curveft_hemisphere_axis_profile(3, q, 2, re, im) == CURVEFT_OK);
  CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-12));  // Wallis value for d=3
}

TEST_CASE("thread cap changes nothing about the values") {
  SurfaceHandle circle(R"({"kind": "circle", "params": {"r": 1.0}})");
  double xi[2] = {7.3, 2.1};
  double re1, im1, re2, im2;
  CHECK(curveft_set_threads(1) == CURVEFT_OK);
  CHECK(curveft_ft_point(circle.ptr, nullptr, xi, &re1, &im1, nullptr, nullptr) == CURVEFT_OK);
  CHECK(curveft_set_threads(0) == CURVEFT_OK);  // restore default
  CHECK(curveft_ft_point(circle.ptr, nullptr, xi, &re2, &im2, nullptr, nullptr) == CURVEFT_OK);
  CHECK(re1 == re2);
  CHECK(im1 == im2);
}

TEST_CASE("decay fit report and verify argument checking") {
  // Synthetic d=2 law: q^{-1/2} cos(2 pi (q - 1/8)).
  std::vector<double> q, re, im;
  for (double x = 10.0; x <= 40.0; x += 0.0625) {
    q.push_back(x);
    re.push_back(std::cos(kTau * (x - 0.125)) / std::sqrt(x));
    im.push_back(0.0);
  }
  char* rep = nullptr;
  CHECK(curveft_decay_phase_fit(q.data(), re.data(), im.data(), static_cast<int>(q.size()), 2,
                                &rep) == CURVEFT_OK);
  std::string json = take(rep);
  CHECK(json.find("\"slope\"") != std::string::npos);

  char* out = nullptr;
  CHECK(curveft_verify("bogus", &out) == CURVEFT_ERR_INVALID_ARGUMENT);
}
