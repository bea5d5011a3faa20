#include "cqd/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cqd/constants.hpp"
#include "cqd/errors.hpp"
#include "cqd/slab.hpp"

namespace cqd {

CutoffError::CutoffError(double width_um, double height_um, double lambda_um,
                         const std::string& field)
    : std::runtime_error("mode cutoff at w=" + std::to_string(width_um) +
                         " um, h=" + std::to_string(height_um) +
                         " um, lambda=" + std::to_string(lambda_um) + " um" +
                         (field.empty() ? "" : " (field " + field + ")")),
      width_um(width_um),
      height_um(height_um),
      lambda_um(lambda_um) {}

ParseError::ParseError(const std::string& path, int line,
                       const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
      line(line) {}

void WaveguideGeometry::validate() const {
  if (!(width_um > 0.0) || !(height_um > 0.0) || !(oxide_height_um > 0.0))
    throw ConfigError("waveguide dimensions must be positive");
  if (!(top_cladding_index >= 1.0))
    throw ConfigError("top cladding index must be >= 1");
}

// ---------------------------------------------------------------------------
// NeffTable
// ---------------------------------------------------------------------------

NeffTable NeffTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string(), 0, "cannot open file");
  std::string line;
  int lineno = 0;
  bool header_seen = false;

  struct Row {
    double w, h, lam, neff;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!header_seen) {
      if (line.rfind("# neff-table v1", 0) != 0)
        throw ParseError(file.string(), lineno,
                         "missing '# neff-table v1' header");
      header_seen = true;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    Row r{};
    if (!(ss >> r.w >> r.h >> r.lam >> r.neff))
      throw ParseError(file.string(), lineno, "expected 4 numeric columns");
    if (!std::isfinite(r.w) || !std::isfinite(r.h) || !std::isfinite(r.lam) ||
        !std::isfinite(r.neff))
      throw ParseError(file.string(), lineno, "non-finite entry");
    if (r.neff <= 0.0)
      throw ParseError(file.string(), lineno, "non-positive n_eff");
    rows.push_back(r);
  }
  if (rows.empty()) throw ParseError(file.string(), lineno, "no data rows");

  NeffTable t;
  for (const Row& r : rows) {
    if (t.widths_.empty() || r.w > t.widths_.back())
      t.widths_.push_back(r.w);
    else if (r.w < t.widths_.back())
      throw ParseError(file.string(), 0, "width axis not sorted ascending");
  }
  // rebuild width list without duplicates
  t.widths_.clear();
  for (const Row& r : rows)
    if (t.widths_.empty() || r.w != t.widths_.back()) t.widths_.push_back(r.w);

  // heights: collected within the first width block, must repeat identically
  std::vector<double> heights;
  for (const Row& r : rows) {
    if (r.w != t.widths_.front()) break;
    if (heights.empty() || r.h != heights.back()) {
      if (!heights.empty() && r.h < heights.back())
        throw ParseError(file.string(), 0, "height axis not sorted ascending");
      heights.push_back(r.h);
    }
  }
  // dedupe heights
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  t.heights_ = heights;

  const std::size_t blocks = t.widths_.size() * t.heights_.size();
  if (rows.size() % blocks != 0)
    throw ParseError(file.string(), 0,
                     "row count is not a multiple of the (width, height) grid");
  const std::size_t nl = rows.size() / blocks;

  std::size_t idx = 0;
  for (std::size_t iw = 0; iw < t.widths_.size(); ++iw) {
    for (std::size_t ih = 0; ih < t.heights_.size(); ++ih) {
      Eigen::VectorXd lam(nl), ne(nl);
      for (std::size_t il = 0; il < nl; ++il, ++idx) {
        const Row& r = rows[idx];
        if (r.w != t.widths_[iw] || r.h != t.heights_[ih])
          throw ParseError(file.string(), 0,
                           "rows not sorted by (width, height, wavelength)");
        if (il > 0 && r.lam <= lam(static_cast<Eigen::Index>(il) - 1))
          throw ParseError(file.string(), 0,
                           "wavelength axis not strictly increasing");
        lam(static_cast<Eigen::Index>(il)) = r.lam;
        ne(static_cast<Eigen::Index>(il)) = r.neff;
      }
      t.blocks_.push_back({lam, ne, CubicSpline(lam, ne)});
    }
  }
  return t;
}

void NeffTable::save(const std::filesystem::path& file) const {
  std::ofstream out(file);
  if (!out) throw ParseError(file.string(), 0, "cannot open file for writing");
  out << "# neff-table v1\n";
  out << "# width_um height_um wavelength_um neff\n";
  out.precision(12);
  for (std::size_t iw = 0; iw < widths_.size(); ++iw)
    for (std::size_t ih = 0; ih < heights_.size(); ++ih) {
      const Block& b = block_at(iw, ih);
      for (Eigen::Index i = 0; i < b.lambda.size(); ++i)
        out << widths_[iw] << ' ' << heights_[ih] << ' ' << b.lambda(i) << ' '
            << b.neff(i) << '\n';
    }
}

double NeffTable::lambda_min() const { return blocks_.front().spline.x_min(); }
double NeffTable::lambda_max() const { return blocks_.front().spline.x_max(); }

namespace {
// bracketing index pair and weight for linear interpolation on an axis
struct AxisPos {
  std::size_t i0, i1;
  double t;
};
AxisPos locate(const std::vector<double>& axis, double x) {
  if (axis.size() == 1) return {0, 0, 0.0};
  auto it = std::upper_bound(axis.begin(), axis.end(), x);
  std::size_t i = it == axis.begin() ? 0 : std::distance(axis.begin(), it) - 1;
  i = std::min(i, axis.size() - 2);
  const double t = (x - axis[i]) / (axis[i + 1] - axis[i]);
  return {i, i + 1, std::clamp(t, 0.0, 1.0)};
}
}  // namespace

double NeffTable::interpolate(double width_um, double height_um,
                              double lambda_um) const {
  const AxisPos pw = locate(widths_, width_um);
  const AxisPos ph = locate(heights_, height_um);
  const double f00 = block_at(pw.i0, ph.i0).spline(lambda_um);
  const double f01 = block_at(pw.i0, ph.i1).spline(lambda_um);
  const double f10 = block_at(pw.i1, ph.i0).spline(lambda_um);
  const double f11 = block_at(pw.i1, ph.i1).spline(lambda_um);
  const double f0 = f00 * (1.0 - ph.t) + f01 * ph.t;
  const double f1 = f10 * (1.0 - ph.t) + f11 * ph.t;
  return f0 * (1.0 - pw.t) + f1 * pw.t;
}

// ---------------------------------------------------------------------------
// DispersionModel
// ---------------------------------------------------------------------------

DispersionModel DispersionModel::effective_index(WaveguideGeometry geometry) {
  geometry.validate();
  DispersionModel m;
  m.geometry_ = std::move(geometry);
  return m;
}

DispersionModel DispersionModel::tabulated(
    std::shared_ptr<const NeffTable> table, WaveguideGeometry geometry) {
  geometry.validate();
  DispersionModel m;
  m.geometry_ = std::move(geometry);
  m.table_ = std::move(table);
  return m;
}

DispersionModel DispersionModel::with_geometry(
    WaveguideGeometry geometry) const {
  geometry.validate();
  DispersionModel m = *this;
  m.geometry_ = std::move(geometry);
  return m;
}

double DispersionModel::effective_index_at(double lambda_um) const {
  if (table_)
    return table_->interpolate(geometry_.width_um, geometry_.height_um,
                               lambda_um);
  const double n_core = sellmeier_index(geometry_.core, lambda_um);
  const double n_sub = sellmeier_index(geometry_.substrate, lambda_um);
  const double n_top = geometry_.top_cladding_index;
  // vertical stack, TE polarization for the quasi-TE mode
  const auto n1 = slab_effective_index(n_core, n_sub, n_top,
                                       geometry_.height_um, lambda_um,
                                       SlabPolarization::TE);
  if (!n1)
    throw CutoffError(geometry_.width_um, geometry_.height_um, lambda_um);
  // lateral confinement, TM polarization, symmetric air cladding
  const auto n2 = slab_effective_index(*n1, n_top, n_top, geometry_.width_um,
                                       lambda_um, SlabPolarization::TM);
  if (!n2)
    throw CutoffError(geometry_.width_um, geometry_.height_um, lambda_um);
  return *n2;
}

double DispersionModel::propagation_constant(double omega) const {
  const double lambda = wavelength_from_omega(omega);
  return effective_index_at(lambda) * omega / kSpeedOfLight;
}

double DispersionModel::group_index(double omega) const {
  const double h = 1e-3;  // rad/ps
  const auto diff = [&](double step) {
    return (propagation_constant(omega + step) -
            propagation_constant(omega - step)) /
           (2.0 * step);
  };
  const double d1 = diff(h);
  const double d2 = diff(h / 2.0);
  return kSpeedOfLight * (4.0 * d2 - d1) / 3.0;
}

SampledDispersion::SampledDispersion(const DispersionModel& model,
                                     double omega_lo, double omega_hi,
                                     int points) {
  Eigen::VectorXd om = Eigen::VectorXd::LinSpaced(points, omega_lo, omega_hi);
  Eigen::VectorXd k(points);
  for (int i = 0; i < points; ++i) k(i) = model.propagation_constant(om(i));
  k_spline_ = CubicSpline(om, k);
}

double max_effective_index_deviation(const DispersionModel& analytic,
                                     const DispersionModel& tabulated,
                                     double lambda_lo_um, double lambda_hi_um,
                                     int points) {
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double lam =
        lambda_lo_um + (lambda_hi_um - lambda_lo_um) * i / (points - 1.0);
    worst = std::max(worst, std::abs(analytic.effective_index_at(lam) -
                                     tabulated.effective_index_at(lam)));
  }
  return worst;
}

}  // namespace cqd
