#include "cqd/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace cqd {

CubicSpline::CubicSpline(Eigen::VectorXd x, Eigen::VectorXd y)
    : x_(std::move(x)), y_(std::move(y)) {
  const Eigen::Index n = x_.size();
  if (n < 2 || y_.size() != n)
    throw std::invalid_argument("CubicSpline needs >= 2 matching points");
  for (Eigen::Index i = 1; i < n; ++i)
    if (x_(i) <= x_(i - 1))
      throw std::invalid_argument("CubicSpline abscissae must increase");
  m_.setZero(n);
  if (n == 2) return;

  // Thomas solve of the tridiagonal natural-spline system
  Eigen::VectorXd a(n), b(n), c(n), d(n);
  a(0) = c(0) = d(0) = 0.0;
  b(0) = 1.0;
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    const double h0 = x_(i) - x_(i - 1);
    const double h1 = x_(i + 1) - x_(i);
    a(i) = h0 / 6.0;
    b(i) = (h0 + h1) / 3.0;
    c(i) = h1 / 6.0;
    d(i) = (y_(i + 1) - y_(i)) / h1 - (y_(i) - y_(i - 1)) / h0;
  }
  a(n - 1) = c(n - 1) = d(n - 1) = 0.0;
  b(n - 1) = 1.0;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double w = a(i) / b(i - 1);
    b(i) -= w * c(i - 1);
    d(i) -= w * d(i - 1);
  }
  m_(n - 1) = d(n - 1) / b(n - 1);
  for (Eigen::Index i = n - 2; i >= 0; --i)
    m_(i) = (d(i) - c(i) * m_(i + 1)) / b(i);
}

Eigen::Index CubicSpline::segment(double x) const {
  const auto* begin = x_.data();
  const auto* end = begin + x_.size();
  auto it = std::upper_bound(begin, end, x);
  Eigen::Index i = std::distance(begin, it) - 1;
  return std::clamp<Eigen::Index>(i, 0, x_.size() - 2);
}

double CubicSpline::operator()(double x) const {
  if (x <= x_(0)) return y_(0) + derivative(x_(0)) * (x - x_(0));
  if (x >= x_(x_.size() - 1)) {
    const double xe = x_(x_.size() - 1);
    return y_(x_.size() - 1) + derivative(xe) * (x - xe);
  }
  const Eigen::Index i = segment(x);
  const double h = x_(i + 1) - x_(i);
  const double t = (x_(i + 1) - x) / h;
  const double u = (x - x_(i)) / h;
  return t * y_(i) + u * y_(i + 1) +
         ((t * t * t - t) * m_(i) + (u * u * u - u) * m_(i + 1)) * h * h / 6.0;
}

double CubicSpline::derivative(double x) const {
  const Eigen::Index i = segment(std::clamp(x, x_(0), x_(x_.size() - 1)));
  const double h = x_(i + 1) - x_(i);
  const double t = (x_(i + 1) - std::clamp(x, x_(0), x_(x_.size() - 1))) / h;
  const double u = 1.0 - t;
  return (y_(i + 1) - y_(i)) / h +
         ((3.0 * u * u - 1.0) * m_(i + 1) - (3.0 * t * t - 1.0) * m_(i)) * h /
             6.0;
}

}  // namespace cqd
