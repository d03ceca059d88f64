// Independent reference computations used by the unit and acceptance suites.
// These deliberately avoid the library's solution paths: the quintic oracle
// solves the full 6x6 boundary system with Eigen, quadrature is numeric, and
// the rectangle-overlap oracle projects explicit corners.

#ifndef DECOC_TESTS_ORACLES_HPP
#define DECOC_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "decoc/trajectory.hpp"
#include "decoc/validation.hpp"

namespace oracle {

/// Direct linear solve of the six boundary conditions of a quintic.
inline std::array<double, 6> quintic_boundary_solve(double p0, double v0, double a0,
                                                    double p1, double v1, double a1,
                                                    double T) {
  Eigen::Matrix<double, 6, 6> A = Eigen::Matrix<double, 6, 6>::Zero();
  Eigen::Matrix<double, 6, 1> b;
  // p(0), v(0), a(0)
  A(0, 0) = 1.0;
  A(1, 1) = 1.0;
  A(2, 2) = 2.0;
  // p(T), v(T), a(T)
  for (int k = 0; k < 6; ++k) A(3, k) = std::pow(T, k);
  for (int k = 1; k < 6; ++k) A(4, k) = k * std::pow(T, k - 1);
  for (int k = 2; k < 6; ++k) A(5, k) = k * (k - 1) * std::pow(T, k - 2);
  b << p0, v0, a0, p1, v1, a1;
  const Eigen::Matrix<double, 6, 1> x = A.fullPivLu().solve(b);
  std::array<double, 6> c{};
  for (int k = 0; k < 6; ++k) c[k] = x(k);
  return c;
}

/// Max |p''(t)| of a quintic over [0, T] on a dense grid.
inline double max_abs_accel_on_grid(const decoc::Quintic& q, double T, double h) {
  double peak = 0.0;
  for (double t = 0.0; t <= T + 0.5 * h; t += h) {
    peak = std::max(peak, std::abs(q.deriv2(std::min(t, T))));
  }
  return peak;
}

/// Max |curvature| along a quintic pair on a dense grid.
inline double max_abs_curvature_on_grid(const decoc::QuinticPair& qp, double h) {
  double peak = 0.0;
  for (double t = 0.0; t <= qp.duration + 0.5 * h; t += h) {
    const double tc = std::min(t, qp.duration);
    peak = std::max(peak, std::abs(decoc::curvature_at(qp.x.deriv1(tc), qp.y.deriv1(tc),
                                                       qp.x.deriv2(tc), qp.y.deriv2(tc))));
  }
  return peak;
}

/// Simpson quadrature of p''(t)^2 over [0, T].
inline double simpson_squared_accel(const decoc::Quintic& q, double T, int intervals) {
  if (intervals % 2 == 1) ++intervals;
  const double h = T / intervals;
  auto f = [&](double t) {
    const double a = q.deriv2(t);
    return a * a;
  };
  double sum = f(0.0) + f(T);
  for (int i = 1; i < intervals; ++i) sum += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

struct Corners {
  std::array<double, 4> xs;
  std::array<double, 4> ys;
};

inline Corners box_corners(const decoc::OrientedBox& b) {
  Corners c;
  const double ch = std::cos(b.heading);
  const double sh = std::sin(b.heading);
  const double lx[4] = {+b.half_length, +b.half_length, -b.half_length, -b.half_length};
  const double ly[4] = {+b.half_width, -b.half_width, +b.half_width, -b.half_width};
  for (int i = 0; i < 4; ++i) {
    c.xs[i] = b.cx + lx[i] * ch - ly[i] * sh;
    c.ys[i] = b.cy + lx[i] * sh + ly[i] * ch;
  }
  return c;
}

/// Corner-projection separating-axis test, written independently of the
/// library's extent-based formulation. Touching counts as overlap.
inline bool rects_overlap_corners(const decoc::OrientedBox& a, const decoc::OrientedBox& b) {
  const Corners ca = box_corners(a);
  const Corners cb = box_corners(b);
  const double axes[4][2] = {
      {std::cos(a.heading), std::sin(a.heading)},
      {-std::sin(a.heading), std::cos(a.heading)},
      {std::cos(b.heading), std::sin(b.heading)},
      {-std::sin(b.heading), std::cos(b.heading)},
  };
  for (const auto& axis : axes) {
    double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
    for (int i = 0; i < 4; ++i) {
      const double pa = ca.xs[i] * axis[0] + ca.ys[i] * axis[1];
      const double pb = cb.xs[i] * axis[0] + cb.ys[i] * axis[1];
      amin = std::min(amin, pa);
      amax = std::max(amax, pa);
      bmin = std::min(bmin, pb);
      bmax = std::max(bmax, pb);
    }
    if (amax < bmin || bmax < amin) return false;
  }
  return true;
}

/// All four corners inside the lateral corridor [0, width] (closed).
inline bool rect_inside_corridor(const decoc::OrientedBox& b, double width) {
  const Corners c = box_corners(b);
  for (int i = 0; i < 4; ++i) {
    if (c.ys[i] < 0.0 || c.ys[i] > width) return false;
  }
  return true;
}

inline double population_stddev(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= values.size();
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  return std::sqrt(var / values.size());
}

}  // namespace oracle

#endif  // DECOC_TESTS_ORACLES_HPP
