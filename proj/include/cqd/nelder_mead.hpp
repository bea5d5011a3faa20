#pragma once

#include <functional>

#include <Eigen/Core>

namespace cqd {

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct NelderMeadOptions {
  double x_tolerance = 1e-5;   // simplex diameter
  double f_tolerance = 1e-14;  // value spread
  int max_iterations = 2000;
  double initial_scale = 1e-2;  // relative simplex edge, plus absolute floor
};

/// Deterministic downhill-simplex minimizer. Non-finite objective values are
/// ordered worse than any finite value, so cutoff regions repel the simplex.
NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    Eigen::VectorXd start, const NelderMeadOptions& options = {});

}  // namespace cqd
