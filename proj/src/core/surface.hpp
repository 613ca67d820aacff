#pragma once

#include "core/chart.hpp"

#include <optional>

namespace curveft {

enum class OverlapPolicy { Disjoint, Declared };

// Smooth bump weight on one chart. The profile is a product of
// exp(1 - 1/(1-t^2)) factors mapped onto the support box scaled by
// `amplitude` (<= 1), so it is C-infinity, equals `amplitude` at the box
// center and vanishes with all derivatives on the boundary. `floor` is the
// superlevel threshold used for cone restriction.
class Window {
 public:
  // Constant-one window over the whole chart domain.
  static Window one(int chart_index, Box domain);
  static Window bump(int chart_index, Box support, double floor, double amplitude = 1.0);

  int chart_index() const { return chart_index_; }
  const Box& support() const { return support_; }
  double floor() const { return floor_; }
  double amplitude() const { return amplitude_; }
  bool constant_one() const { return constant_one_; }
  std::uint64_t id() const { return id_; }

  double value(const Vec& u) const;
  Vec gradient(const Vec& u) const;

  // Per-axis half-width of {value >= level} (product profile), for seeding.
  Box superlevel_bounding_box(double level) const;

 private:
  Window() = default;
  int chart_index_ = 0;
  Box support_;
  double floor_ = 0.5;
  double amplitude_ = 1.0;
  bool constant_one_ = false;
  std::uint64_t id_ = 0;
};

class Surface {
 public:
  Surface(std::vector<Chart> charts, OverlapPolicy policy = OverlapPolicy::Disjoint,
          std::vector<int> overlap_groups = {}, std::string name = {}, bool closed = false);

  int ambient_dim() const { return dim_; }
  int chart_count() const { return static_cast<int>(charts_.size()); }
  const Chart& chart(int i) const { return charts_.at(i); }
  const std::vector<Chart>& charts() const { return charts_; }
  OverlapPolicy policy() const { return policy_; }
  const std::string& name() const { return name_; }
  // True when the charts tile a closed manifold: chart-box boundary points are
  // then interior surface points (seams), not boundary of S.
  bool closed() const { return closed_; }
  std::uint64_t id() const { return id_; }

  // Multiplicity of every point of chart i (constant per chart: declared
  // overlaps are whole-chart groups).
  int multiplicity(int chart_index) const;
  double multiplicity_weight(int chart_index) const { return 1.0 / multiplicity(chart_index); }

  double diameter_estimate() const;

 private:
  std::vector<Chart> charts_;
  OverlapPolicy policy_;
  std::vector<int> groups_;
  std::vector<int> group_size_;
  std::string name_;
  bool closed_ = false;
  int dim_ = 0;
  std::uint64_t id_ = 0;
};

struct SurfacePoint {
  int chart_index = 0;
  Vec u;
  Vec position;
  double area_element = 0.0;
};

SurfacePoint make_surface_point(const Surface& surface, int chart_index, const Vec& u);

// Per-chart inner boxes V_i (empty optional = chart not selected). Boxes must
// be compactly contained in the chart domain along non-periodic axes.
struct SubsurfaceSelection {
  std::vector<std::vector<Box>> boxes;  // per chart, union of boxes
  double margin = 0.0;

  static SubsurfaceSelection whole_chart(const Surface& surface, int chart_index, double margin);
  void validate(const Surface& surface) const;
};

// Region of a surface used by stationary-point / cone operations.
class Region {
 public:
  static Region whole();
  static Region selection(SubsurfaceSelection sel);
  static Region window_superlevel(const Window* window);  // {psi >= floor}
  static Region window_support(const Window* window);     // {psi > 0}

  bool is_whole() const { return kind_ == Kind::Whole; }
  const Window* window() const { return window_; }

  bool contains(const Surface& surface, int chart_index, const Vec& u) const;
  // Distance-like margin to the region boundary; <= 0 outside. Used to flag
  // tangencies attained only at the boundary.
  double boundary_margin(const Surface& surface, int chart_index, const Vec& u) const;

 private:
  enum class Kind { Whole, Selection, WindowSuperlevel, WindowSupport };
  Kind kind_ = Kind::Whole;
  SubsurfaceSelection selection_;
  const Window* window_ = nullptr;
};

struct SurfaceWithWindow {
  const Surface* surface = nullptr;
  const Window* window = nullptr;  // may be null
};

// --- validation -------------------------------------------------------------

struct ChartValidation {
  bool pass = false;
  double min_singular_value = 0.0;
  double min_abs_curvature = 0.0;
  double max_abs_curvature = 0.0;
  Vec worst_immersion_point;
  Vec worst_curvature_point;
  std::string message;
};

struct ValidationThresholds {
  double min_singular_value = 1e-8;
  double min_abs_curvature = 1e-8;
};

// Samples a cell-centered grid (samples_per_axis per axis) and checks the
// immersion rank and nonvanishing Gaussian curvature.
ChartValidation validate_chart(const Chart& chart, int samples_per_axis,
                               const ValidationThresholds& thresholds = {});

// Inverse-multiplicity-weighted area element at a point.
double surface_measure_weight(const Surface& surface, const SurfacePoint& point);

}  // namespace curveft
