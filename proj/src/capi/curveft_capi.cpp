#include "curveft.h"

#include "core/catalog.hpp"
#include "core/fourier.hpp"
#include "core/frame.hpp"
#include "core/jsonio.hpp"
#include "core/shape.hpp"
#include "core/spectrum.hpp"
#include "core/stationary.hpp"
#include "core/verify.hpp"

#include <cstring>

using namespace curveft;

struct curveft_surface {
  Surface surface;
};
struct curveft_window {
  Window window;
};
struct curveft_spectrum {
  Spectrum spectrum;
};

namespace {

thread_local std::string t_last_error;

int code_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidArgument: return CURVEFT_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return CURVEFT_ERR_PARSE;
    case ErrorCode::Validation: return CURVEFT_ERR_VALIDATION;
    case ErrorCode::Quadrature: return CURVEFT_ERR_QUADRATURE;
    case ErrorCode::NonConvergence: return CURVEFT_ERR_NONCONVERGENCE;
    case ErrorCode::Singular: return CURVEFT_ERR_SINGULAR;
    case ErrorCode::Budget: return CURVEFT_ERR_BUDGET;
    case ErrorCode::Io: return CURVEFT_ERR_IO;
    case ErrorCode::Internal: return CURVEFT_ERR_INTERNAL;
  }
  return CURVEFT_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    t_last_error.clear();
    return fn();
  } catch (const Error& e) {
    t_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return CURVEFT_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return CURVEFT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Vec to_vec(const double* data, int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = data[i];
  return v;
}

int require(bool ok, const char* what) {
  if (!ok) {
    t_last_error = what;
    return CURVEFT_ERR_INVALID_ARGUMENT;
  }
  return CURVEFT_OK;
}

Region region_for(const curveft_window* w, int restrict_to_floor) {
  if (!w) return Region::whole();
  return restrict_to_floor ? Region::window_superlevel(&w->window)
                           : Region::window_support(&w->window);
}

}  // namespace

extern "C" {

const char* curveft_status_name(int status) {
  switch (status) {
    case CURVEFT_OK: return "ok";
    case CURVEFT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CURVEFT_ERR_PARSE: return "parse_error";
    case CURVEFT_ERR_VALIDATION: return "validation_failed";
    case CURVEFT_ERR_QUADRATURE: return "quadrature_error";
    case CURVEFT_ERR_NONCONVERGENCE: return "nonconvergence";
    case CURVEFT_ERR_SINGULAR: return "singular";
    case CURVEFT_ERR_BUDGET: return "budget_exceeded";
    case CURVEFT_ERR_IO: return "io_error";
    case CURVEFT_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* curveft_last_error(void) { return t_last_error.c_str(); }

void curveft_string_free(char* s) { std::free(s); }

int curveft_set_threads(int n) {
  set_thread_cap(n);
  return CURVEFT_OK;
}

int curveft_surface_create(const char* spec_json, curveft_surface** out) {
  return guarded([&]() -> int {
    if (int rc = require(spec_json && out, "surface_create: null argument")) return rc;
    Json spec = parse_json(spec_json);
    *out = new curveft_surface{surface_from_json(spec)};
    return CURVEFT_OK;
  });
}

void curveft_surface_destroy(curveft_surface* s) { delete s; }

int curveft_surface_dim(const curveft_surface* s, int* d) {
  return guarded([&]() -> int {
    if (int rc = require(s && d, "surface_dim: null argument")) return rc;
    *d = s->surface.ambient_dim();
    return CURVEFT_OK;
  });
}

int curveft_surface_chart_count(const curveft_surface* s, int* count) {
  return guarded([&]() -> int {
    if (int rc = require(s && count, "chart_count: null argument")) return rc;
    *count = s->surface.chart_count();
    return CURVEFT_OK;
  });
}

int curveft_surface_name(const curveft_surface* s, char** name) {
  return guarded([&]() -> int {
    if (int rc = require(s && name, "surface_name: null argument")) return rc;
    *name = dup_string(s->surface.name());
    return CURVEFT_OK;
  });
}

int curveft_hemisphere_create(const char* spec_json, curveft_surface** full,
                              curveft_surface** half) {
  return guarded([&]() -> int {
    if (int rc = require(spec_json && full && half, "hemisphere_create: null argument")) return rc;
    HemispherePair pair = hemisphere_pair_from_json(parse_json(spec_json));
    *full = new curveft_surface{std::move(pair.full)};
    *half = new curveft_surface{std::move(pair.half)};
    return CURVEFT_OK;
  });
}

int curveft_surface_validate(const curveft_surface* s, int samples_per_axis,
                             char** report_json) {
  return guarded([&]() -> int {
    if (int rc = require(s != nullptr, "validate: null surface")) return rc;
    Json charts = Json::array();
    bool all_pass = true;
    for (int i = 0; i < s->surface.chart_count(); ++i) {
      ChartValidation v = validate_chart(s->surface.chart(i), samples_per_axis);
      all_pass = all_pass && v.pass;
      Json entry = {{"chart", i},
                    {"label", s->surface.chart(i).label()},
                    {"pass", v.pass},
                    {"min_singular_value", v.min_singular_value},
                    {"min_abs_curvature", v.min_abs_curvature},
                    {"max_abs_curvature", v.max_abs_curvature},
                    {"message", v.message}};
      if (!v.pass) {
        const Vec& worst = v.min_singular_value <= 1e-8 ? v.worst_immersion_point
                                                        : v.worst_curvature_point;
        entry["worst_point"] = std::vector<double>(worst.data(), worst.data() + worst.size());
      }
      charts.push_back(entry);
    }
    Json report = {{"surface", s->surface.name()}, {"pass", all_pass}, {"charts", charts}};
    if (report_json) *report_json = dup_string(report.dump());
    if (!all_pass) {
      t_last_error = "validation failed";
      return static_cast<int>(CURVEFT_ERR_VALIDATION);
    }
    return static_cast<int>(CURVEFT_OK);
  });
}

int curveft_window_create(const curveft_surface* s, const char* window_json,
                          curveft_window** out) {
  return guarded([&]() -> int {
    if (int rc = require(s && window_json && out, "window_create: null argument")) return rc;
    *out = new curveft_window{window_from_json(s->surface, parse_json(window_json))};
    return CURVEFT_OK;
  });
}

void curveft_window_destroy(curveft_window* w) { delete w; }

int curveft_total_mass(const curveft_surface* s, const curveft_window* w, double* mass,
                       double* est_error) {
  return guarded([&]() -> int {
    if (int rc = require(s && mass, "total_mass: null argument")) return rc;
    MassResult r = total_mass(s->surface, w ? &w->window : nullptr);
    *mass = r.value;
    if (est_error) *est_error = r.est_error;
    return CURVEFT_OK;
  });
}

int curveft_ft_point(const curveft_surface* s, const curveft_window* w, const double* xi,
                     double* re, double* im, double* est_error, int64_t* nodes) {
  return guarded([&]() -> int {
    if (int rc = require(s && xi && re && im, "ft_point: null argument")) return rc;
    FourierSample smp = ft_point(s->surface, w ? &w->window : nullptr,
                                 to_vec(xi, s->surface.ambient_dim()));
    *re = smp.value.real();
    *im = smp.value.imag();
    if (est_error) *est_error = smp.est_error;
    if (nodes) *nodes = smp.node_count;
    return CURVEFT_OK;
  });
}

int curveft_ft_scan(const curveft_surface* s, const curveft_window* w, const double* xi,
                    int count, double* re, double* im, double* est_error, int64_t* nodes,
                    int* failed) {
  return guarded([&]() -> int {
    if (int rc = require(s && xi && re && im && count >= 0, "ft_scan: bad arguments")) return rc;
    const int d = s->surface.ambient_dim();
    std::vector<Vec> freqs;
    freqs.reserve(count);
    for (int i = 0; i < count; ++i) freqs.push_back(to_vec(xi + i * d, d));
    FtScanResult scan = ft_scan(s->surface, w ? &w->window : nullptr, freqs);
    for (int i = 0; i < count; ++i) {
      re[i] = scan.samples[i].value.real();
      im[i] = scan.samples[i].value.imag();
      if (est_error) est_error[i] = scan.samples[i].est_error;
      if (nodes) nodes[i] = scan.samples[i].node_count;
      if (failed) failed[i] = 0;
    }
    if (failed)
      for (const auto& f : scan.failures) failed[f.index] = 1;
    return CURVEFT_OK;
  });
}

int curveft_shape_data(const curveft_surface* s, int chart_index, const double* u,
                       const double* orient_toward, double* gaussian_curvature, int* signature,
                       double* unit_normal, double* principal_curvatures) {
  return guarded([&]() -> int {
    if (int rc = require(s && u && orient_toward, "shape_data: null argument")) return rc;
    if (int rc = require(chart_index >= 0 && chart_index < s->surface.chart_count(),
                         "shape_data: chart index out of range"))
      return rc;
    const int d = s->surface.ambient_dim();
    ShapeData sd = shape_data(s->surface, chart_index, to_vec(u, d - 1), to_vec(orient_toward, d));
    if (gaussian_curvature) *gaussian_curvature = sd.gaussian_curvature;
    if (signature) *signature = sd.signature;
    if (unit_normal)
      for (int i = 0; i < d; ++i) unit_normal[i] = sd.unit_normal[i];
    if (principal_curvatures)
      for (int i = 0; i < d - 1; ++i) principal_curvatures[i] = sd.principal_curvatures[i];
    return CURVEFT_OK;
  });
}

int curveft_revolution_curvature(double theta, int d, double* out) {
  return guarded([&]() -> int {
    if (int rc = require(out != nullptr, "revolution_curvature: null out")) return rc;
    *out = curvature_closed_form_revolution(theta, d);
    return CURVEFT_OK;
  });
}

int curveft_stationary_points(const curveft_surface* s, const curveft_window* w,
                              int restrict_to_floor, const double* direction, int max_points,
                              int* count, double* params, double* positions, double* curvatures,
                              int* signatures, double* window_values, int* flags) {
  return guarded([&]() -> int {
    if (int rc = require(s && direction && count, "stationary_points: null argument")) return rc;
    const int d = s->surface.ambient_dim();
    StationaryResult st = stationary_points(s->surface, region_for(w, restrict_to_floor),
                                            to_vec(direction, d));
    int n = std::min<int>(max_points, static_cast<int>(st.points.size()));
    *count = static_cast<int>(st.points.size());
    for (int i = 0; i < n; ++i) {
      const auto& p = st.points[i];
      if (params)
        for (int a = 0; a < d - 1; ++a) params[i * (d - 1) + a] = p.shape.point.u[a];
      if (positions)
        for (int c = 0; c < d; ++c) positions[i * d + c] = p.shape.point.position[c];
      if (curvatures) curvatures[i] = p.shape.gaussian_curvature;
      if (signatures) signatures[i] = p.shape.signature;
      if (window_values) window_values[i] = p.window_value;
    }
    if (flags) *flags = (st.boundary_tangency ? 1 : 0) | (st.non_unique ? 2 : 0);
    return CURVEFT_OK;
  });
}

int curveft_sp_eval(const curveft_surface* s, const curveft_window* w, const double* xi,
                    double* re, double* im, int* n_points) {
  return guarded([&]() -> int {
    if (int rc = require(s && xi && re && im, "sp_eval: null argument")) return rc;
    StationaryData sd = stationary_phase_eval(s->surface, w ? &w->window : nullptr,
                                              to_vec(xi, s->surface.ambient_dim()));
    *re = sd.value.real();
    *im = sd.value.imag();
    if (n_points) *n_points = static_cast<int>(sd.terms.size());
    return CURVEFT_OK;
  });
}

int curveft_cone_membership(const curveft_surface* s, const curveft_window* w,
                            int restrict_to_floor, const double* xi, double angular_tol,
                            int* member, double* nearest_angle) {
  return guarded([&]() -> int {
    if (int rc = require(s && xi && member, "cone_membership: null argument")) return rc;
    NormalConeQuery q = normal_cone_query(s->surface, region_for(w, restrict_to_floor),
                                          to_vec(xi, s->surface.ambient_dim()), angular_tol);
    *member = q.member ? 1 : 0;
    if (nearest_angle) *nearest_angle = q.nearest_angle;
    return CURVEFT_OK;
  });
}

int curveft_coverage(const curveft_surface* s, const curveft_window* w, int restrict_to_floor,
                     double resolution, double membership_tol, double* fraction, char** csv) {
  return guarded([&]() -> int {
    if (int rc = require(s && fraction, "coverage: null argument")) return rc;
    CoverageReport rep = normal_cone_coverage(s->surface, region_for(w, restrict_to_floor),
                                              resolution, membership_tol);
    *fraction = rep.fraction;
    if (csv) {
      std::string text;
      const int d = s->surface.ambient_dim();
      for (int c = 0; c < d; ++c) text += "dir_" + std::to_string(c + 1) + ",";
      text += "member,nearest_angle\n";
      for (const auto& cell : rep.cells) {
        for (int c = 0; c < d; ++c) text += format_double(cell.direction[c]) + ",";
        text += std::string(cell.member ? "1" : "0") + "," + format_double(cell.nearest_angle) +
                "\n";
      }
      *csv = dup_string(text);
    }
    return CURVEFT_OK;
  });
}

int curveft_hemisphere_axis_profile(int d, const double* q, int count, double* re, double* im) {
  return guarded([&]() -> int {
    if (int rc = require(q && re && im && count >= 0, "hemisphere_axis_profile: bad arguments"))
      return rc;
    std::vector<double> radii(q, q + count);
    HemisphereProfileReport rep = hemisphere_axis_profile(d, radii);
    for (int i = 0; i < count; ++i) {
      re[i] = rep.integral[i].real();
      im[i] = rep.integral[i].imag();
    }
    return CURVEFT_OK;
  });
}

int curveft_decay_phase_fit(const double* q, const double* re, const double* im, int count,
                            int d, char** report_json) {
  return guarded([&]() -> int {
    if (int rc = require(q && re && im && report_json, "decay_phase_fit: null argument"))
      return rc;
    std::vector<double> qs(q, q + count);
    std::vector<Complex> values(count);
    for (int i = 0; i < count; ++i) values[i] = Complex(re[i], im[i]);
    DecayPhaseFit fit = decay_phase_fit(qs, values, d);
    Json rep = {{"slope", fit.envelope.slope},
                {"intercept", fit.envelope.intercept},
                {"residual", fit.envelope.residual},
                {"zeros", fit.zeros},
                {"zero_offset_max_dev", fit.zero_offset_max_dev},
                {"zero_offset_mean_dev", fit.zero_offset_mean_dev}};
    *report_json = dup_string(rep.dump());
    return CURVEFT_OK;
  });
}

int curveft_sp_compare(const curveft_surface* s, const curveft_window* w,
                       const double* direction, const double* radii, int count, double* ft_re,
                       double* ft_im, double* sp_re, double* sp_im, double* normalized_dev,
                       char** report_json) {
  return guarded([&]() -> int {
    if (int rc = require(s && direction && radii && count > 0, "sp_compare: bad arguments"))
      return rc;
    std::vector<double> rs(radii, radii + count);
    AsymptoticCompareReport rep =
        asymptotic_compare(s->surface, w ? &w->window : nullptr,
                           to_vec(direction, s->surface.ambient_dim()), rs);
    for (int i = 0; i < count; ++i) {
      if (ft_re) ft_re[i] = rep.rows[i].ft.real();
      if (ft_im) ft_im[i] = rep.rows[i].ft.imag();
      if (sp_re) sp_re[i] = rep.rows[i].sp.real();
      if (sp_im) sp_im[i] = rep.rows[i].sp.imag();
      if (normalized_dev) normalized_dev[i] = rep.rows[i].normalized_dev;
    }
    if (report_json) {
      Json j = {{"slope", rep.deviation_fit.slope},
                {"intercept", rep.deviation_fit.intercept},
                {"residual", rep.deviation_fit.residual},
                {"max_normalized_dev", rep.max_normalized_dev}};
      *report_json = dup_string(j.dump());
    }
    return CURVEFT_OK;
  });
}

int curveft_spectrum_create(const char* spec_json, int dim, curveft_spectrum** out) {
  return guarded([&]() -> int {
    if (int rc = require(spec_json && out, "spectrum_create: null argument")) return rc;
    SpectrumSpec spec = spectrum_from_json(parse_json(spec_json), dim);
    *out = new curveft_spectrum{generate_spectrum(spec)};
    return CURVEFT_OK;
  });
}

void curveft_spectrum_destroy(curveft_spectrum* sp) { delete sp; }

int curveft_spectrum_size(const curveft_spectrum* sp, int64_t* size) {
  return guarded([&]() -> int {
    if (int rc = require(sp && size, "spectrum_size: null argument")) return rc;
    *size = sp->spectrum.size();
    return CURVEFT_OK;
  });
}

int curveft_spectrum_dim(const curveft_spectrum* sp, int* dim) {
  return guarded([&]() -> int {
    if (int rc = require(sp && dim, "spectrum_dim: null argument")) return rc;
    *dim = sp->spectrum.dim();
    return CURVEFT_OK;
  });
}

int curveft_spectrum_points(const curveft_spectrum* sp, double* out) {
  return guarded([&]() -> int {
    if (int rc = require(sp && out, "spectrum_points: null argument")) return rc;
    const int d = sp->spectrum.dim();
    for (std::int64_t i = 0; i < sp->spectrum.size(); ++i)
      for (int c = 0; c < d; ++c) out[i * d + c] = sp->spectrum.points[i][c];
    return CURVEFT_OK;
  });
}

int curveft_divergence_sums(const char* spectrum_json, int dim, int d, const double* radii,
                            int count, double* sums, double* growth) {
  return guarded([&]() -> int {
    if (int rc = require(spectrum_json && radii && sums, "divergence_sums: null argument"))
      return rc;
    SpectrumSpec spec = spectrum_from_json(parse_json(spectrum_json), dim);
    DivergencePartialSums out =
        divergence_partial_sum(spec, d, std::vector<double>(radii, radii + count));
    for (int i = 0; i < count; ++i) {
      sums[i] = out.sums[i];
      if (growth) growth[i] = out.growth[i];
    }
    return CURVEFT_OK;
  });
}

int curveft_energy_scan(const curveft_surface* s, const curveft_window* w,
                        const curveft_spectrum* sp, const double* xi, int count, double* energy) {
  return guarded([&]() -> int {
    if (int rc = require(s && sp && xi && energy, "energy_scan: null argument")) return rc;
    const int d = s->surface.ambient_dim();
    std::vector<Vec> grid;
    for (int i = 0; i < count; ++i) grid.push_back(to_vec(xi + i * d, d));
    EnergyScanResult r = energy_scan(s->surface, w ? &w->window : nullptr, sp->spectrum, grid);
    for (int i = 0; i < count; ++i) energy[i] = r.energy[i];
    return CURVEFT_OK;
  });
}

int curveft_cone_filter(const curveft_spectrum* sp, const curveft_surface* s,
                        const curveft_window* w, int restrict_to_floor, double angular_tol,
                        int* in_cone) {
  return guarded([&]() -> int {
    if (int rc = require(sp && s && in_cone, "cone_filter: null argument")) return rc;
    ConeFilterResult r = cone_filter(sp->spectrum, s->surface, region_for(w, restrict_to_floor),
                                     angular_tol);
    for (std::int64_t i = 0; i < sp->spectrum.size(); ++i) in_cone[i] = r.in_cone[i] ? 1 : 0;
    return CURVEFT_OK;
  });
}

int curveft_cone_lower_bound(const curveft_surface* s, const curveft_window* w,
                             const double* radii, int n_radii, int n_directions,
                             double* min_scaled_power, double* min_ratio) {
  return guarded([&]() -> int {
    if (int rc = require(s && w && radii && min_scaled_power && min_ratio,
                         "cone_lower_bound: null argument"))
      return rc;
    ConeLowerBoundReport rep = cone_lower_bound_check(
        s->surface, w->window, std::vector<double>(radii, radii + n_radii), n_directions);
    *min_scaled_power = rep.min_scaled_power;
    *min_ratio = rep.min_ratio;
    return CURVEFT_OK;
  });
}

int curveft_frame_bounds(const curveft_surface* s, const curveft_window* w,
                         const curveft_spectrum* sp, const double* test_grid, int h_count,
                         double* alpha_min, double* alpha_max, double* cond_g) {
  return guarded([&]() -> int {
    if (int rc = require(s && sp && test_grid && alpha_min && alpha_max,
                         "frame_bounds: null argument"))
      return rc;
    const int d = s->surface.ambient_dim();
    std::vector<Vec> grid;
    for (int i = 0; i < h_count; ++i) grid.push_back(to_vec(test_grid + i * d, d));
    FrameEstimate est =
        frame_bounds_estimate(s->surface, w ? &w->window : nullptr, sp->spectrum, grid);
    *alpha_min = est.alpha_min;
    *alpha_max = est.alpha_max;
    if (cond_g) *cond_g = est.cond_g;
    return CURVEFT_OK;
  });
}

int curveft_verify(const char* suite, char** report_json) {
  return guarded([&]() -> int {
    if (int rc = require(suite != nullptr, "verify: null suite")) return rc;
    VerifyReport rep = run_verification(suite);
    if (report_json) {
      Json checks = Json::array();
      for (const auto& r : rep.results)
        checks.push_back({{"id", r.id},
                          {"description", r.description},
                          {"pass", r.pass},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
      Json j = {{"suite", rep.suite},
                {"all_pass", rep.all_pass},
                {"total_seconds", rep.total_seconds},
                {"criteria", checks}};
      *report_json = dup_string(j.dump(2));
    }
    if (!rep.all_pass) {
      t_last_error = "verification suite reported failures";
      return static_cast<int>(CURVEFT_ERR_VALIDATION);
    }
    return static_cast<int>(CURVEFT_OK);
  });
}

}  // extern "C"
