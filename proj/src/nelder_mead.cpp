#include "cqd/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace cqd {

namespace {
double worse_if_nonfinite(double v) {
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}
}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    Eigen::VectorXd start, const NelderMeadOptions& options) {
  const int n = static_cast<int>(start.size());
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

  std::vector<Eigen::VectorXd> x(n + 1, start);
  std::vector<double> f(n + 1);
  for (int i = 0; i < n; ++i) {
    double step = options.initial_scale * std::abs(start(i));
    if (step == 0.0) step = options.initial_scale;
    x[i + 1](i) += step;
  }
  for (int i = 0; i <= n; ++i) f[i] = worse_if_nonfinite(objective(x[i]));

  NelderMeadResult result;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    std::vector<int> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f[a] < f[b]; });
    std::vector<Eigen::VectorXd> xs(n + 1);
    std::vector<double> fs(n + 1);
    for (int i = 0; i <= n; ++i) {
      xs[i] = x[order[i]];
      fs[i] = f[order[i]];
    }
    x.swap(xs);
    f.swap(fs);

    double diam = 0.0;
    for (int i = 1; i <= n; ++i) diam = std::max(diam, (x[i] - x[0]).norm());
    const bool f_ok = std::isfinite(f[n]) && (f[n] - f[0]) <= options.f_tolerance;
    if (diam <= options.x_tolerance || f_ok) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += x[i];
    centroid /= n;

    const Eigen::VectorXd xr = centroid + alpha * (centroid - x[n]);
    const double fr = worse_if_nonfinite(objective(xr));
    if (fr < f[0]) {
      const Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
      const double fe = worse_if_nonfinite(objective(xe));
      if (fe < fr) {
        x[n] = xe;
        f[n] = fe;
      } else {
        x[n] = xr;
        f[n] = fr;
      }
    } else if (fr < f[n - 1]) {
      x[n] = xr;
      f[n] = fr;
    } else {
      const bool outside = fr < f[n];
      const Eigen::VectorXd xc =
          outside ? centroid + rho * (xr - centroid)
                  : centroid + rho * (x[n] - centroid);
      const double fc = worse_if_nonfinite(objective(xc));
      if (fc < (outside ? fr : f[n])) {
        x[n] = xc;
        f[n] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          x[i] = x[0] + sigma * (x[i] - x[0]);
          f[i] = worse_if_nonfinite(objective(x[i]));
        }
      }
    }
  }
  result.x = x[0];
  result.value = f[0];
  result.iterations = it;
  return result;
}

}  // namespace cqd
