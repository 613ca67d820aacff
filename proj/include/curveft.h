/* curveft — Fourier analysis of surface measures on curved hypersurfaces.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through this API; every function returns a curveft_status and
 * writes results through out-parameters. On failure the thread-local message
 * from curveft_last_error() describes the problem.
 *
 * Conventions (documented once, used everywhere):
 *   - Fourier kernel e^{-2 pi i x.xi}; frequencies are in cycles per length.
 *   - Vectors are packed row-major as plain double arrays of length d.
 *   - Strings returned through char** are heap-allocated; release them with
 *     curveft_string_free.
 */
#ifndef CURVEFT_H
#define CURVEFT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum curveft_status {
  CURVEFT_OK = 0,
  CURVEFT_ERR_INVALID_ARGUMENT = 1,
  CURVEFT_ERR_PARSE = 2,
  CURVEFT_ERR_VALIDATION = 3,
  CURVEFT_ERR_QUADRATURE = 4,
  CURVEFT_ERR_NONCONVERGENCE = 5,
  CURVEFT_ERR_SINGULAR = 6,
  CURVEFT_ERR_BUDGET = 7,
  CURVEFT_ERR_IO = 8,
  CURVEFT_ERR_INTERNAL = 9
} curveft_status;

typedef struct curveft_surface curveft_surface;
typedef struct curveft_window curveft_window;
typedef struct curveft_spectrum curveft_spectrum;

const char* curveft_status_name(int status);
/* Message of the last failure on the calling thread ("" when none). */
const char* curveft_last_error(void);
void curveft_string_free(char* s);
/* Caps worker threads; n <= 0 restores the CURVEFT_THREADS / hardware default. */
int curveft_set_threads(int n);

/* --- surfaces and windows ----------------------------------------------- */

/* spec_json: {"kind": "...", "params": {...}}; kinds: circle, circle_double,
 * sphere, hemisphere, cap_graph, spherical_cap, figure1_curve,
 * revolution_surface, flat_segment. */
int curveft_surface_create(const char* spec_json, curveft_surface** out);
void curveft_surface_destroy(curveft_surface* s);
int curveft_surface_dim(const curveft_surface* s, int* d);
int curveft_surface_chart_count(const curveft_surface* s, int* count);
int curveft_surface_name(const curveft_surface* s, char** name);
/* Both halves of a {"kind":"hemisphere"} spec. */
int curveft_hemisphere_create(const char* spec_json, curveft_surface** full,
                              curveft_surface** half);

/* Immersion + curvature validation on a sample grid; report is a JSON string.
 * Returns CURVEFT_ERR_VALIDATION when a check fails (report still written). */
int curveft_surface_validate(const curveft_surface* s, int samples_per_axis, char** report_json);

/* window_json: {"kind":"bump","chart":i,"support":{"lo":[..],"hi":[..]},
 * "floor":f} or {"kind":"one","chart":i}. */
int curveft_window_create(const curveft_surface* s, const char* window_json,
                          curveft_window** out);
void curveft_window_destroy(curveft_window* w);

/* --- measure and transforms ---------------------------------------------- */

int curveft_total_mass(const curveft_surface* s, const curveft_window* w, double* mass,
                       double* est_error);

int curveft_ft_point(const curveft_surface* s, const curveft_window* w, const double* xi,
                     double* re, double* im, double* est_error, int64_t* nodes);

/* xi: count*d doubles. Outputs are arrays of length count; failed[i] is set to
 * 1 and the sample zeroed when that point's quadrature failed (scan continues;
 * the function still returns CURVEFT_OK). */
int curveft_ft_scan(const curveft_surface* s, const curveft_window* w, const double* xi,
                    int count, double* re, double* im, double* est_error, int64_t* nodes,
                    int* failed);

int curveft_shape_data(const curveft_surface* s, int chart_index, const double* u,
                       const double* orient_toward, double* gaussian_curvature, int* signature,
                       double* unit_normal, double* principal_curvatures);

int curveft_revolution_curvature(double theta, int d, double* out);

/* Stationary points with normal parallel to +-direction. params gets
 * count*(d-1) entries, positions count*d, one curvature/signature/window value
 * per point. *flags: bit 0 = boundary tangency, bit 1 = non-unique. */
int curveft_stationary_points(const curveft_surface* s, const curveft_window* w,
                              int restrict_to_floor, const double* direction, int max_points,
                              int* count, double* params, double* positions,
                              double* curvatures, int* signatures, double* window_values,
                              int* flags);

/* Leading stationary-phase value of the windowed transform at xi. */
int curveft_sp_eval(const curveft_surface* s, const curveft_window* w, const double* xi,
                    double* re, double* im, int* n_points);

int curveft_cone_membership(const curveft_surface* s, const curveft_window* w,
                            int restrict_to_floor, const double* xi, double angular_tol,
                            int* member, double* nearest_angle);

/* Tessellates the directions at `resolution` and reports the attained
 * fraction; csv (optional) gets rows "dir_1..dir_d,member,nearest_angle". */
int curveft_coverage(const curveft_surface* s, const curveft_window* w, int restrict_to_floor,
                     double resolution, double membership_tol, double* fraction, char** csv);

/* int_0^{pi/2} e^{-2 pi i q cos t} sin^{d-2} t dt for each q. */
int curveft_hemisphere_axis_profile(int d, const double* q, int count, double* re, double* im);

/* Envelope exponent + zero positions of a ray scan; JSON report
 * {slope, intercept, residual, zeros[], zero_offset_max_dev}. */
int curveft_decay_phase_fit(const double* q, const double* re, const double* im, int count,
                            int d, char** report_json);

/* Quadrature vs stationary phase along a ray; the per-sample table goes to
 * the out arrays (length count) and the fit to the JSON report. */
int curveft_sp_compare(const curveft_surface* s, const curveft_window* w,
                       const double* direction, const double* radii, int count, double* ft_re,
                       double* ft_im, double* sp_re, double* sp_im, double* normalized_dev,
                       char** report_json);

/* --- spectra and frame diagnostics ---------------------------------------- */

/* spec_json: {"kind":"lattice_ball"|"axis_line"|"cone_lattice"|"explicit",...} */
int curveft_spectrum_create(const char* spec_json, int dim, curveft_spectrum** out);
void curveft_spectrum_destroy(curveft_spectrum* sp);
int curveft_spectrum_size(const curveft_spectrum* sp, int64_t* size);
int curveft_spectrum_dim(const curveft_spectrum* sp, int* dim);
/* Fills size*dim doubles, sorted by (|lambda|, lexicographic). */
int curveft_spectrum_points(const curveft_spectrum* sp, double* out);

/* S(R) = sum_{0<|l|<=R} |l|^{-(d-1)} and the growth ratio S(2R)/S(R). */
int curveft_divergence_sums(const char* spectrum_json, int dim, int d, const double* radii,
                            int count, double* sums, double* growth);

int curveft_energy_scan(const curveft_surface* s, const curveft_window* w,
                        const curveft_spectrum* sp, const double* xi, int count, double* energy);

/* in_cone[i] = 1 when spectrum point i lies in the normal cone of the region
 * ({psi >= floor} when restrict_to_floor, else the whole surface). */
int curveft_cone_filter(const curveft_spectrum* sp, const curveft_surface* s,
                        const curveft_window* w, int restrict_to_floor, double angular_tol,
                        int* in_cone);

/* min over sampled in-cone frequencies of |ft|^2 |lambda|^{d-1}, and its ratio
 * against the single-point stationary-phase prediction. */
int curveft_cone_lower_bound(const curveft_surface* s, const curveft_window* w,
                             const double* radii, int n_radii, int n_directions,
                             double* min_scaled_power, double* min_ratio);

/* Generalized eigenvalue bounds of (A, G) on the test frequencies
 * (h_count*d doubles). */
int curveft_frame_bounds(const curveft_surface* s, const curveft_window* w,
                         const curveft_spectrum* sp, const double* test_grid, int h_count,
                         double* alpha_min, double* alpha_max, double* cond_g);

/* --- verification ----------------------------------------------------------- */

/* Runs the "fast" or "full" verification suite. Returns CURVEFT_OK when all
 * checks pass, CURVEFT_ERR_VALIDATION otherwise; the JSON report lists each
 * criterion with pass/fail, details and timings. */
int curveft_verify(const char* suite, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CURVEFT_H */
