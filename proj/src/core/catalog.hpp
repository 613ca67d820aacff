#pragma once

#include "core/surface.hpp"

#include <variant>

namespace curveft {

// Height functions available to cap_graph charts.
struct SphereCapHeight {
  double radius = 1.0;
};
struct ParaboloidHeight {
  Vec curvatures;  // principal curvatures at the vertex, all nonzero
};
using HeightSpec = std::variant<SphereCapHeight, ParaboloidHeight>;

struct HemispherePair {
  Surface full;
  Surface half;  // restriction to {x_d >= 0}
};

// Unit-speed circle of radius r (one periodic chart).
Surface circle(double r);
// Two coincident copies of the circle under the declared-overlap policy
// (multiplicity 2 everywhere); useful to exercise the weighted measure.
Surface circle_double(double r);

// Round sphere of radius r in R^d. d = 2 gives the circle; d >= 3 uses 2d
// gnomonic face charts with half-open boxes, disjoint up to measure-zero
// seams, nondegenerate on the closed boxes.
Surface sphere(int d, double r);

// Centrally symmetric sphere cut by {x_d >= 0}; equator handled by chart
// restriction.
HemispherePair hemisphere_pair(int d, double r);

// Graph chart (x, h(x)) over a base box in R^{d-1}.
Surface cap_graph(int d, const HeightSpec& height, const Box& base);

// Geometrically round cap of the unit-normal aperture `half_angle` about the
// +x_d axis: colatitude x azimuth polar chart (an arc for d = 2).
Surface spherical_cap(int d, double r, double half_angle);

// (cos t + 2 cos 2t, sin t + sin 2t), a closed self-intersecting plane curve
// with nonvanishing curvature.
Surface figure1_curve();

// Revolution of the figure1 profile about the last axis, in R^d (d = 2 is the
// plane curve itself; d = 3, 4 supported).
Surface revolution_surface(int d);

// Straight segment (x, 0): zero curvature, fails validation by design of the
// negative-control tests.
Surface flat_segment(double length);

Window bump_window(const Surface& surface, int chart_index, const Box& support, double floor,
                   double amplitude = 1.0);
Window window_one(const Surface& surface, int chart_index);

}  // namespace curveft
