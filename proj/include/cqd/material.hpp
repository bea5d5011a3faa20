#pragma once

#include <array>
#include <string>

namespace cqd {

/// Three-term Sellmeier material: n^2 = 1 + sum_i B_i lam^2 / (lam^2 - C_i),
/// lam in um, C_i in um^2.
struct MaterialModel {
  std::string name;
  std::array<double, 3> sellmeier_b{};
  std::array<double, 3> sellmeier_c{};
  double valid_lo_um = 0.0;
  double valid_hi_um = 0.0;
};

/// Refractive index at a wavelength inside the validity window.
/// Throws WavelengthRangeError outside it.
double sellmeier_index(const MaterialModel& material, double lambda_um);

/// Built-in materials: "si3n4" (stoichiometric LPCVD) and "sio2" (fused silica).
/// Throws ConfigError for unknown names.
const MaterialModel& builtin_material(const std::string& name);

}  // namespace cqd
