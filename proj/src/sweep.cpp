#include "wva/sweep.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wva/errors.hpp"
#include "wva/fit.hpp"

namespace wva {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDegenerateTol = 1e-12;

double omega_at(const ModelSpec& model, int i)
{
  // Mirror-exact for ranges symmetric about zero.
  const double mid = 0.5 * (model.omega_min + model.omega_max);
  const double half = 0.5 * (model.omega_max - model.omega_min);
  const int n = model.steps - 1;
  return mid + half * static_cast<double>(2 * i - n) / static_cast<double>(n);
}

double abs_ls_slope(const std::vector<double>& x, const std::vector<double>& y)
{
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0))
    throw DomainError("sensitivity window rows share a single omega");
  return std::abs(sxy / sxx);
}

} // namespace

void ModelSpec::validate() const
{
  probe.validate();
  if (!std::isfinite(area_s) || area_s <= 0.0)
    throw DomainError("model '" + name + "': loop area must be positive");
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw DomainError("model '" + name + "': selection angles must be finite");
  if (!std::isfinite(omega_min) || !std::isfinite(omega_max) || !(omega_min < omega_max))
    throw DomainError("model '" + name + "': need omega_min < omega_max");
  if (steps < 3)
    throw DomainError("model '" + name + "': a sweep needs at least 3 steps");
}

InterferometerConfig ModelSpec::interferometer() const
{
  return InterferometerConfig::from_nm(area_s, probe.lambda0);
}

OmegaWindow default_window(const ModelSpec& model)
{
  const double mid = 0.5 * (model.omega_min + model.omega_max);
  const double half = 0.1 * (model.omega_max - model.omega_min);
  return {mid - half, mid + half};
}

SweepResult run_sweep(const ModelSpec& model, SpectrumForm form, const SweepOptions& options)
{
  model.validate();
  const InterferometerConfig cfg = model.interferometer();
  const std::vector<double> grid = default_grid(model.probe, options.grid_points);
  const double g = model.probe.coupling();

  SweepResult result;
  result.model = model;
  result.form = form;
  result.window = options.window.value_or(default_window(model));

  const double ab = model.alpha + model.beta;
  if (std::abs(std::sin(ab) * std::cos(model.alpha)) <= kDegenerateTol) {
    result.degenerate_zero_shift = true;
    result.warnings.push_back("m vanishes identically (sin(alpha+beta)*cos(alpha) = 0): the weak "
                              "value is -1 for every omega and the analytic shift is zero");
  }
  if (std::abs(std::cos(ab) * std::sin(model.alpha)) <= kDegenerateTol) {
    result.degenerate_zero_shift = true;
    result.warnings.push_back("n vanishes identically (cos(alpha+beta)*sin(alpha) = 0): the weak "
                              "value is +1 for every omega and the analytic shift is zero");
  }

  // Omega = 0 fit is the reference for the fitted column.
  std::optional<double> reference;
  std::string reference_error;
  try {
    const auto wv0 = weak_value({model.alpha, model.beta, 0.0});
    const auto spec0 = output_spectrum(model.probe, wv0, g, grid, form);
    reference = fit_center(spec0, model.probe.width).center;
  } catch (const Error& e) {
    reference_error = std::string("reference fit: ") + e.what();
    result.warnings.push_back("omega = 0 reference unavailable, fitted column empty: " +
                              std::string(e.what()));
  }

  result.rows.resize(static_cast<std::size_t>(model.steps));
  for (int i = 0; i < model.steps; ++i) {
    SweepRow& row = result.rows[static_cast<std::size_t>(i)];
    row.omega = omega_at(model, i);
    row.phi = sagnac_phase(cfg, row.omega);
    try {
      const auto wv = weak_value({model.alpha, model.beta, row.phi});
      row.im_aw = wv.a_w.imag();
      row.postselect_prob = wv.postselect_probability();
      row.dlambda_analytic = analytic_wavelength_shift(model.probe, wv.a_w);
      if (!reference) {
        row.dlambda_fitted = kNaN;
        row.flag = reference_error;
      } else if (row.omega == 0.0) {
        row.dlambda_fitted = 0.0;
      } else {
        try {
          const auto spec = output_spectrum(model.probe, wv, g, grid, form);
          row.dlambda_fitted = fit_center(spec, model.probe.width).center - *reference;
        } catch (const Error& e) {
          row.dlambda_fitted = kNaN;
          row.flag = std::string("fit: ") + e.what();
        }
      }
    } catch (const NearOrthogonalError& e) {
      row.im_aw = kNaN;
      const auto amp = amplitudes_mn({model.alpha, model.beta, row.phi});
      row.postselect_prob = std::norm(amp.m + amp.n);
      row.dlambda_analytic = kNaN;
      row.dlambda_fitted = kNaN;
      row.flag = e.what();
    }
  }

  // An all-zero column has slope 0; only a short window is an error.
  try {
    const Sensitivity k = sensitivity(result.rows, result.window);
    result.k_analytic = k.analytic;
    result.k_fitted = k.fitted;
  } catch (const DomainError& e) {
    result.k_analytic = kNaN;
    result.k_fitted = kNaN;
    result.warnings.push_back(std::string("sensitivity unavailable: ") + e.what());
  }
  return result;
}

Sensitivity sensitivity(const std::vector<SweepRow>& rows, OmegaWindow window)
{
  std::vector<double> xa, ya, xf, yf;
  for (const SweepRow& r : rows) {
    if (r.omega < window.lo || r.omega > window.hi)
      continue;
    if (std::isfinite(r.dlambda_analytic)) {
      xa.push_back(r.omega);
      ya.push_back(r.dlambda_analytic);
    }
    if (std::isfinite(r.dlambda_fitted)) {
      xf.push_back(r.omega);
      yf.push_back(r.dlambda_fitted);
    }
  }
  if (xa.size() < 3 || xf.size() < 3)
    throw DomainError("sensitivity needs at least 3 valid rows inside the window");
  return {abs_ls_slope(xa, ya), abs_ls_slope(xf, yf)};
}

double closed_form_sensitivity(const ModelSpec& model)
{
  model.validate();
  const InterferometerConfig cfg = model.interferometer();
  const double dphi_domega = 8.0 * std::numbers::pi * cfg.area_s / (cfg.lambda0_m * kSpeedOfLight);
  const double w = model.probe.width;
  return 4.0 * std::numbers::pi * w * w / model.probe.lambda0 *
         std::abs(im_weak_value_slope(model.alpha, model.beta)) * dphi_domega;
}

std::vector<ModelSpec> table1_models(double lambda0_nm, double dlambda_nm)
{
  SpectrumModel probe{1.0, lambda0_nm, dlambda_nm};
  probe.validate();
  // S = 16 m^2 matches a 4 m x 4 m ring.
  return {
    {"model1", 16.0, 0.1, -0.5, probe},
    {"model2", 16.0, 0.1, -0.3, probe},
    {"model3", 16.0, 0.1, -0.1, probe},
    {"model4", 3.0, 0.1, -0.1, probe},
  };
}

} // namespace wva
