#pragma once

namespace cqd {

// Global unit system: lengths in um, time in ps, angular frequency in rad/ps,
// propagation constants in rad/um, powers in mW, bandwidths stored in rad/ps.
inline constexpr double kSpeedOfLight = 299.792458;  // um/ps
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Table-1 style bandwidths are quoted in THz and interpreted as Gaussian
// 1/e-amplitude half-widths in ordinary frequency.
inline constexpr double angular_from_thz(double f_thz) { return kTwoPi * f_thz; }
inline constexpr double thz_from_angular(double w) { return w / kTwoPi; }

inline constexpr double omega_from_wavelength(double lambda_um) {
  return kTwoPi * kSpeedOfLight / lambda_um;
}
inline constexpr double wavelength_from_omega(double omega) {
  return kTwoPi * kSpeedOfLight / omega;
}

}  // namespace cqd
