#pragma once

#include <stdexcept>
#include <string>

namespace cqd {

// Wavelength outside a material's Sellmeier validity window.
class WavelengthRangeError : public std::domain_error {
 public:
  WavelengthRangeError(const std::string& material, double lambda_um,
                       double lo_um, double hi_um);
  double wavelength_um;
};

// No guided fundamental mode at the requested (geometry, wavelength).
class CutoffError : public std::runtime_error {
 public:
  CutoffError(double width_um, double height_um, double lambda_um,
              const std::string& field = {});
  double width_um, height_um, lambda_um;
};

// Malformed dispersion table / plan / input file; carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, int line, const std::string& what);
  int line;
};

// Bad configuration (unknown key, missing key, invalid value).
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated call contract (unnormalized input, mismatched grids, ...).
class ContractError : public std::logic_error {
  using std::logic_error::logic_error;
};

// A solver failed to converge (geometry search, operating-point solve).
class SolverError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cqd
