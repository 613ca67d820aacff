#pragma once

#include "core/common.hpp"

namespace curveft {

// Generator for a finite frequency set. Regeneration is deterministic:
// points come out sorted by (|lambda|, lexicographic) with duplicates removed.
struct SpectrumSpec {
  enum class Kind { Explicit, LatticeBall, AxisLine, ConeLattice };
  Kind kind = Kind::Explicit;
  int dim = 2;
  std::vector<Vec> explicit_points;
  double spacing = 1.0;
  double radius = 1.0;
  double step = 1.0;      // axis_line
  int axis = -1;          // axis_line: coordinate index, default last
  Vec cone_axis;          // cone_lattice
  double half_angle = 0;  // cone_lattice
  bool exclude_zero = false;

  static SpectrumSpec lattice_ball(int dim, double spacing, double radius);
  static SpectrumSpec axis_line(int dim, double step, double radius, int axis = -1);
  static SpectrumSpec cone_lattice(Vec axis, double half_angle, double spacing, double radius);
  static SpectrumSpec explicit_list(std::vector<Vec> points);
};

struct Spectrum {
  SpectrumSpec spec;
  std::vector<Vec> points;
  int dim() const { return spec.dim; }
  std::int64_t size() const { return static_cast<std::int64_t>(points.size()); }
};

// Enumerates the spectrum; refuses more than 10^7 points.
Spectrum generate_spectrum(const SpectrumSpec& spec);
// Same generator stretched to a different radius (for partial-sum diagnostics).
Spectrum generate_spectrum_to_radius(const SpectrumSpec& spec, double radius);

struct DivergencePartialSums {
  std::vector<double> radii;
  std::vector<double> sums;        // S(R) = sum_{0 < |l| <= R} |l|^{-(d-1)}
  std::vector<double> growth;      // S(2R)/S(R) per radius
  std::int64_t points_used = 0;
};

// Exact finite sums of |lambda|^{-(d-1)} (zero always excluded) with the
// doubling-ratio growth diagnostic. For parametric generators the enumeration
// extends to 2*max(radii); explicit lists are used as-is.
DivergencePartialSums divergence_partial_sum(const SpectrumSpec& spec, int d,
                                             std::vector<double> radii);

}  // namespace curveft
