#pragma once

#include "core/shape.hpp"

namespace curveft {

struct StationaryOptions {
  int seeds_per_axis = 32;
  double angular_tol = 1e-9;  // acceptance on 1 - |n.e| for tangency roots
  double merge_tol = 1e-8;    // position dedup, relative to the surface diameter
  int max_newton_iters = 80;
};

struct StationaryPointData {
  ShapeData shape;            // oriented toward +direction
  double window_value = 1.0;  // 1 when no window applies
  double normal_alignment = 0.0;  // unit_normal . direction before orientation flip
  bool at_region_boundary = false;
};

struct StationaryResult {
  std::vector<StationaryPointData> points;  // points inside the region
  bool boundary_tangency = false;  // tangency attained only at the region boundary
  bool non_unique = false;         // more than one point (flagged, not an error)
};

// All points of `region` whose unit normal is parallel to +-direction, by
// multi-start Newton on u -> J(u)^T e seeded from a uniform grid.
StationaryResult stationary_points(const Surface& surface, const Region& region,
                                   const Vec& direction, const StationaryOptions& opts = {});

struct NormalConeQuery {
  bool member = false;
  double nearest_angle = 0.0;  // min over region of angle(normal line, direction line)
  bool boundary_tangency = false;
};

NormalConeQuery normal_cone_query(const Surface& surface, const Region& region, const Vec& xi,
                                  double angular_tol, const StationaryOptions& opts = {});

bool normal_cone_membership(const Surface& surface, const Region& region, const Vec& xi,
                            double angular_tol, const StationaryOptions& opts = {});

// Deterministic tessellation of the unit directions: uniform arcs for d = 2,
// recursively subdivided octahedron for d = 3.
struct DirectionCell {
  Vec direction;
  double weight = 0.0;  // surface measure of the cell on S^{d-1}
};
std::vector<DirectionCell> sphere_tessellation(int d, double angular_resolution);

struct CoverageCellReport {
  Vec direction;
  bool member = false;
  double nearest_angle = 0.0;
};

struct CoverageReport {
  double fraction = 0.0;  // weight-fraction of cells whose center is attained
  double resolution = 0.0;
  std::vector<CoverageCellReport> cells;
};

CoverageReport normal_cone_coverage(const Surface& surface, const Region& region,
                                    double angular_resolution, double membership_tol = 1e-3,
                                    const StationaryOptions& opts = {});

}  // namespace curveft
