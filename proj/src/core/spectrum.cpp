#include "core/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace curveft {

SpectrumSpec SpectrumSpec::lattice_ball(int dim, double spacing, double radius) {
  SpectrumSpec s;
  s.kind = Kind::LatticeBall;
  s.dim = dim;
  s.spacing = spacing;
  s.radius = radius;
  return s;
}

SpectrumSpec SpectrumSpec::axis_line(int dim, double step, double radius, int axis) {
  SpectrumSpec s;
  s.kind = Kind::AxisLine;
  s.dim = dim;
  s.step = step;
  s.radius = radius;
  s.axis = axis;
  return s;
}

SpectrumSpec SpectrumSpec::cone_lattice(Vec axis, double half_angle, double spacing,
                                        double radius) {
  SpectrumSpec s;
  s.kind = Kind::ConeLattice;
  s.dim = static_cast<int>(axis.size());
  s.cone_axis = std::move(axis);
  s.half_angle = half_angle;
  s.spacing = spacing;
  s.radius = radius;
  return s;
}

SpectrumSpec SpectrumSpec::explicit_list(std::vector<Vec> points) {
  SpectrumSpec s;
  s.kind = Kind::Explicit;
  if (points.empty()) fail(ErrorCode::InvalidArgument, "spectrum: empty explicit list");
  s.dim = static_cast<int>(points.front().size());
  s.explicit_points = std::move(points);
  return s;
}

namespace {

constexpr std::int64_t kMaxPoints = 10'000'000;

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

void sort_points(std::vector<Vec>* pts) {
  std::sort(pts->begin(), pts->end(), [](const Vec& a, const Vec& b) {
    double na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    return lex_less(a, b);
  });
  pts->erase(std::unique(pts->begin(), pts->end(),
                         [](const Vec& a, const Vec& b) { return (a - b).norm() == 0.0; }),
             pts->end());
}

void enumerate_lattice(int dim, double spacing, double radius,
                       const std::function<bool(const Vec&)>& keep, std::vector<Vec>* out) {
  if (!(spacing > 0.0) || !(radius > 0.0))
    fail(ErrorCode::InvalidArgument, "spectrum: spacing and radius must be positive");
  const std::int64_t kmax = static_cast<std::int64_t>(std::floor(radius / spacing));
  double est = 1.0;
  for (int a = 0; a < dim; ++a) est *= (2.0 * kmax + 1.0);
  if (est > 8.0 * kMaxPoints)
    fail(ErrorCode::Budget, "spectrum: lattice enumeration too large");
  std::vector<std::int64_t> idx(dim, -kmax);
  Vec lam(dim);
  const double r2 = radius * radius;
  for (;;) {
    double n2 = 0.0;
    for (int a = 0; a < dim; ++a) {
      lam[a] = idx[a] * spacing;
      n2 += lam[a] * lam[a];
    }
    if (n2 <= r2 && keep(lam)) {
      out->push_back(lam);
      if (static_cast<std::int64_t>(out->size()) > kMaxPoints)
        fail(ErrorCode::Budget, "spectrum: more than 10^7 points refused");
    }
    int a = 0;
    while (a < dim && ++idx[a] > kmax) idx[a++] = -kmax;
    if (a == dim) break;
  }
}

Spectrum generate_impl(const SpectrumSpec& spec, double radius) {
  Spectrum out;
  out.spec = spec;
  switch (spec.kind) {
    case SpectrumSpec::Kind::Explicit: {
      out.points = spec.explicit_points;
      break;
    }
    case SpectrumSpec::Kind::LatticeBall: {
      enumerate_lattice(spec.dim, spec.spacing, radius, [](const Vec&) { return true; },
                        &out.points);
      break;
    }
    case SpectrumSpec::Kind::AxisLine: {
      if (!(spec.step > 0.0) || !(radius > 0.0))
        fail(ErrorCode::InvalidArgument, "spectrum: step and radius must be positive");
      int axis = spec.axis < 0 ? spec.dim - 1 : spec.axis;
      if (axis >= spec.dim) fail(ErrorCode::InvalidArgument, "spectrum: axis out of range");
      std::int64_t kmax = static_cast<std::int64_t>(std::floor(radius / spec.step));
      if (2 * kmax + 1 > kMaxPoints)
        fail(ErrorCode::Budget, "spectrum: more than 10^7 points refused");
      for (std::int64_t k = -kmax; k <= kmax; ++k) {
        Vec lam = Vec::Zero(spec.dim);
        lam[axis] = k * spec.step;
        out.points.push_back(lam);
      }
      break;
    }
    case SpectrumSpec::Kind::ConeLattice: {
      if (spec.cone_axis.size() != spec.dim || spec.cone_axis.norm() == 0.0)
        fail(ErrorCode::InvalidArgument, "spectrum: cone axis must be a nonzero d-vector");
      Vec axis = spec.cone_axis / spec.cone_axis.norm();
      double cos_half = std::cos(spec.half_angle);
      enumerate_lattice(
          spec.dim, spec.spacing, radius,
          [&](const Vec& lam) {
            double n = lam.norm();
            if (n == 0.0) return true;
            return std::abs(lam.dot(axis)) / n >= cos_half - 1e-12;
          },
          &out.points);
      break;
    }
  }
  if (spec.exclude_zero) {
    out.points.erase(std::remove_if(out.points.begin(), out.points.end(),
                                    [](const Vec& v) { return v.norm() == 0.0; }),
                     out.points.end());
  }
  sort_points(&out.points);
  return out;
}

}  // namespace

Spectrum generate_spectrum(const SpectrumSpec& spec) { return generate_impl(spec, spec.radius); }

Spectrum generate_spectrum_to_radius(const SpectrumSpec& spec, double radius) {
  return generate_impl(spec, radius);
}

DivergencePartialSums divergence_partial_sum(const SpectrumSpec& spec, int d,
                                             std::vector<double> radii) {
  if (radii.empty()) fail(ErrorCode::InvalidArgument, "divergence_partial_sum: empty radii");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      fail(ErrorCode::InvalidArgument, "divergence_partial_sum: radii must increase");

  double rmax = radii.back();
  Spectrum spectrum = spec.kind == SpectrumSpec::Kind::Explicit
                          ? generate_spectrum(spec)
                          : generate_spectrum_to_radius(spec, 2.0 * rmax);

  DivergencePartialSums out;
  out.radii = radii;
  out.points_used = spectrum.size();

  auto sum_to = [&](double r) {
    Kahan acc;
    for (const Vec& lam : spectrum.points) {  // sorted by |lambda|
      double n = lam.norm();
      if (n == 0.0) continue;
      if (n > r) break;
      acc.add(std::pow(n, -(d - 1.0)));
    }
    return acc.value();
  };

  for (double r : radii) {
    out.sums.push_back(sum_to(r));
    out.growth.push_back(sum_to(2.0 * r) / std::max(out.sums.back(), 1e-300));
  }
  return out;
}

}  // namespace curveft
