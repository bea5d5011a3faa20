#include "cqd/material.hpp"

#include <cmath>

#include "cqd/errors.hpp"

namespace cqd {

WavelengthRangeError::WavelengthRangeError(const std::string& material,
                                           double lambda_um, double lo_um,
                                           double hi_um)
    : std::domain_error("wavelength " + std::to_string(lambda_um) +
                        " um outside validity range [" + std::to_string(lo_um) +
                        ", " + std::to_string(hi_um) + "] um of material " +
                        material),
      wavelength_um(lambda_um) {}

double sellmeier_index(const MaterialModel& material, double lambda_um) {
  if (lambda_um < material.valid_lo_um || lambda_um > material.valid_hi_um)
    throw WavelengthRangeError(material.name, lambda_um, material.valid_lo_um,
                               material.valid_hi_um);
  const double l2 = lambda_um * lambda_um;
  double n2 = 1.0;
  for (int i = 0; i < 3; ++i) {
    if (material.sellmeier_b[i] == 0.0) continue;
    n2 += material.sellmeier_b[i] * l2 / (l2 - material.sellmeier_c[i]);
  }
  return std::sqrt(n2);
}

namespace {
double sq(double x) { return x * x; }

// Fused silica, Malitson 1965.
const MaterialModel kSio2{
    "sio2",
    {0.6961663, 0.4079426, 0.8974794},
    {sq(0.0684043), sq(0.1162414), sq(9.896161)},
    0.21,
    3.71};

// Stoichiometric Si3N4, Luke et al. 2015 (two-term fit; third term unused).
const MaterialModel kSi3n4{
    "si3n4",
    {3.0249, 40314.0, 0.0},
    {sq(0.1353406), sq(1239.842), 0.0},
    0.31,
    5.5};
}  // namespace

const MaterialModel& builtin_material(const std::string& name) {
  if (name == "sio2") return kSio2;
  if (name == "si3n4") return kSi3n4;
  throw ConfigError("unknown built-in material: " + name);
}

}  // namespace cqd
