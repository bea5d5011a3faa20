#pragma once

#include <array>
#include <string>
#include <vector>

#include "cqd/dispersion.hpp"

namespace cqd {

enum class ProcessKind { SFWM, DFG };

/// Central wavelengths of one nonlinear process; derived fields follow from
/// exact energy conservation.
struct ProcessSpec {
  ProcessKind kind = ProcessKind::SFWM;
  double lambda1_um = 0.0;
  double lambda2_um = 0.0;  // DFG only
  double lambda_s_um = 0.0;

  double omega1() const;
  double omega2() const;
  double omega_s() const;
  double omega_i() const;  // SFWM: 2 w1 - ws
  double omega_r() const;  // DFG:  w1 - w2 + ws
  double lambda_i_um() const;
  double lambda_r_um() const;
};

/// Signed phase mismatch with the per-field k contributions that re-sum to it.
struct PhasematchResult {
  double delta_k = 0.0;  // rad/um
  struct Term {
    std::string field;
    double signed_k;  // rad/um, sign as it enters delta_k
  };
  std::vector<Term> contributions;
};

/// SFWM mismatch 2 k(w1) - k(ws) - k(wi) with wi = 2 w1 - ws.
PhasematchResult delta_k_sfwm(const DispersionModel& model, double omega1,
                              double omega_s);

/// DFG mismatch k(w1) - k(w2) + k(ws) - k(wr) with wr = w1 - w2 + ws.
PhasematchResult delta_k_dfg(const DispersionModel& model, double omega1,
                             double omega2, double omega_s);

/// Everything needed to instantiate a cross-section except (w, h).
struct GeometryTemplate {
  double oxide_height_um = 1.0;
  MaterialModel core;
  MaterialModel substrate;
  double top_cladding_index = 1.0;

  WaveguideGeometry make(double width_um, double height_um) const;
};

/// Central wavelengths shared by the two processes.
struct OperatingWavelengths {
  double lambda1_um = 0.0;
  double lambda2_um = 0.0;
  double lambda_s_um = 0.0;
  ProcessSpec sfwm() const;
  ProcessSpec dfg() const;
};

/// F_obj = dk_sfwm^2 + dk_dfg^2 at the fixed central wavelengths.
/// Returns +infinity when any field is cut off.
double objective(const GeometryTemplate& templ, double h_um, double w_sfwm_um,
                 double w_dfg_um, const OperatingWavelengths& wavelengths);

struct GeometrySearchSpace {
  double h_lo = 0.3, h_hi = 0.9, h_step = 0.025;          // um
  double ws_lo = 0.6, ws_hi = 2.2, ws_step = 0.002;       // um
  double wd_lo = 0.6, wd_hi = 2.2, wd_step = 0.002;       // um
  double refine_tolerance = 1e-5;                         // um
};

struct GeometryMinimum {
  double h_um = 0.0, w_sfwm_um = 0.0, w_dfg_um = 0.0;
  double objective_value = 0.0;
};

/// Coarse grid scan (separable in the two widths at fixed h) followed by
/// simplex refinement from the best cell. Deterministic.
GeometryMinimum minimize_geometry(const GeometrySearchSpace& space,
                                  const GeometryTemplate& templ,
                                  const OperatingWavelengths& wavelengths);

/// Minimum of the objective over both widths at one fixed height (Fig. 4a
/// style curve evaluation).
GeometryMinimum minimize_widths_at_height(const GeometrySearchSpace& space,
                                          const GeometryTemplate& templ,
                                          double h_um,
                                          const OperatingWavelengths& w);

struct ContourPolyline {
  ProcessKind process;
  int segment_id = 0;
  std::vector<std::array<double, 2>> points;  // (lambda1_um, lambda_s_um)
};

/// Zero contours of dk_sfwm and dk_dfg in the (lambda1, lambda_s) plane with
/// lambda2 fixed, by marching squares. Cutoff cells are skipped; an empty
/// result is not an error.
std::vector<ContourPolyline> phasematch_contour(
    const DispersionModel& sfwm_model, const DispersionModel& dfg_model,
    double lambda1_lo, double lambda1_hi, double lambda_s_lo,
    double lambda_s_hi, double lambda2_um, int grid_points = 161);

struct OperatingPointResult {
  OperatingWavelengths wavelengths;
  double residual_sfwm = 0.0;  // rad/um
  double residual_dfg = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Solves dk_sfwm = dk_dfg = 0 for (lambda1, lambda_s) at fixed lambda2,
/// seeded from the given wavelengths. Damped Newton with a contour-following
/// fallback for the near-degenerate Jacobians that arise close to
/// group-matched designs.
OperatingPointResult solve_operating_point(const DispersionModel& sfwm_model,
                                           const DispersionModel& dfg_model,
                                           const OperatingWavelengths& seed,
                                           double tolerance = 1e-10);

}  // namespace cqd
