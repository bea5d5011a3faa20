#pragma once

#include <Eigen/Core>

namespace cqd {

/// Natural cubic spline through (x_i, y_i); x strictly increasing.
/// Interpolates the knots exactly; evaluation outside the knot range is
/// clamped-slope linear extrapolation.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(Eigen::VectorXd x, Eigen::VectorXd y);

  double operator()(double x) const;
  double derivative(double x) const;
  bool empty() const { return x_.size() == 0; }
  double x_min() const { return x_(0); }
  double x_max() const { return x_(x_.size() - 1); }

 private:
  Eigen::VectorXd x_, y_, m_;  // m_: second derivatives at knots
  Eigen::Index segment(double x) const;
};

}  // namespace cqd
