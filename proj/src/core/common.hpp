#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curveft {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Validation,
  Quadrature,
  NonConvergence,
  Singular,
  Budget,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Axis-aligned box in parameter space.
struct Box {
  Vec lo, hi;

  Box() = default;
  Box(Vec l, Vec h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo.size() != hi.size()) fail(ErrorCode::InvalidArgument, "box lo/hi size mismatch");
    for (int i = 0; i < lo.size(); ++i)
      if (!(lo[i] < hi[i])) fail(ErrorCode::InvalidArgument, "box has empty axis " + std::to_string(i));
  }

  int dim() const { return static_cast<int>(lo.size()); }
  double width(int axis) const { return hi[axis] - lo[axis]; }
  double max_width() const { return (hi - lo).maxCoeff(); }
  Vec center() const { return 0.5 * (lo + hi); }

  bool contains(const Vec& u, double tol = 0.0) const {
    for (int i = 0; i < dim(); ++i)
      if (u[i] < lo[i] - tol || u[i] > hi[i] + tol) return false;
    return true;
  }

  // Distance to the nearest face, negative outside.
  double interior_margin(const Vec& u) const {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim(); ++i) m = std::min({m, u[i] - lo[i], hi[i] - u[i]});
    return m;
  }

  Vec clamp(Vec u) const {
    for (int i = 0; i < dim(); ++i) u[i] = std::min(std::max(u[i], lo[i]), hi[i]);
    return u;
  }

  bool intersect(const Box& other, Box* out) const {
    Vec l = lo.cwiseMax(other.lo), h = hi.cwiseMin(other.hi);
    for (int i = 0; i < dim(); ++i)
      if (!(l[i] < h[i])) return false;
    if (out) *out = Box(l, h);
    return true;
  }
};

// Compensated accumulator; quadrature sums run over millions of nodes.
struct Kahan {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

std::uint64_t fresh_object_id();

int thread_count();
void set_thread_cap(int n);  // <=0 restores the CURVEFT_THREADS / hardware default

// Chunked parallel loop; fn(i) must only write state owned by index i.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

std::string format_double(double v);  // shortest round-trip formatting, stable across runs

}  // namespace curveft
