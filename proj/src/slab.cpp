#include "cqd/slab.hpp"

#include <algorithm>
#include <cmath>

#include "cqd/constants.hpp"

namespace cqd {

namespace {
// Residual of the fundamental-mode transcendental equation:
//   kappa d - atan(r_s g_s / kappa) - atan(r_c g_c / kappa)
// Strictly decreasing in N on (max(n_sub, n_cover), n_film).
double mode_residual(double n_eff, double n_film, double n_sub, double n_cover,
                     double d_um, double k0, SlabPolarization pol) {
  const double kappa =
      k0 * std::sqrt(std::max(n_film * n_film - n_eff * n_eff, 0.0));
  const double gs =
      k0 * std::sqrt(std::max(n_eff * n_eff - n_sub * n_sub, 0.0));
  const double gc =
      k0 * std::sqrt(std::max(n_eff * n_eff - n_cover * n_cover, 0.0));
  if (kappa <= 0.0) return -1e12;
  double rs = 1.0, rc = 1.0;
  if (pol == SlabPolarization::TM) {
    rs = n_film * n_film / (n_sub * n_sub);
    rc = n_film * n_film / (n_cover * n_cover);
  }
  return kappa * d_um - std::atan(rs * gs / kappa) - std::atan(rc * gc / kappa);
}
}  // namespace

std::optional<double> slab_effective_index(double n_film, double n_sub,
                                           double n_cover, double d_um,
                                           double lambda_um,
                                           SlabPolarization pol) {
  const double n_low = std::max(n_sub, n_cover);
  if (n_film <= n_low) return std::nullopt;
  const double k0 = kTwoPi / lambda_um;

  double lo = n_low + 1e-13;
  double hi = n_film - 1e-13;
  if (mode_residual(lo, n_film, n_sub, n_cover, d_um, k0, pol) < 0.0)
    return std::nullopt;  // cutoff: even at the substrate line the phase is short
  // residual(hi) < 0 always (kappa -> 0), so a root is bracketed
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mode_residual(mid, n_film, n_sub, n_cover, d_um, k0, pol) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace cqd
