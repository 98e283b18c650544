#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wva/spectrum.hpp"

namespace wva {

/// One simulated configuration swept over rotation rate.
struct ModelSpec
{
  std::string name;
  double area_s = 0.0; // m^2
  double alpha = 0.0;  // rad
  double beta = 0.0;   // rad
  SpectrumModel probe;
  double omega_min = -0.1; // rad/s
  double omega_max = 0.1;
  int steps = 201;

  void validate() const;
  InterferometerConfig interferometer() const;
};

struct SweepRow
{
  double omega = 0.0;
  double phi = 0.0;
  double im_aw = 0.0;
  double dlambda_analytic = 0.0; // nm
  double dlambda_fitted = 0.0;   // nm, relative to the omega = 0 fit
  double postselect_prob = 0.0;
  std::string flag; // empty when the row is fully valid

  bool ok() const { return flag.empty(); }
};

struct OmegaWindow
{
  double lo = 0.0;
  double hi = 0.0;
};

struct SweepResult
{
  ModelSpec model;
  SpectrumForm form = SpectrumForm::exact;
  std::vector<SweepRow> rows;
  OmegaWindow window;
  double k_analytic = 0.0; // nm/(rad/s)
  double k_fitted = 0.0;
  bool degenerate_zero_shift = false;
  std::vector<std::string> warnings;
};

struct SweepOptions
{
  std::size_t grid_points = 2048;
  std::optional<OmegaWindow> window; // default: central 20% of the range
};

struct Sensitivity
{
  double analytic = 0.0;
  double fitted = 0.0;
};

// Central 20% of [omega_min, omega_max].
OmegaWindow default_window(const ModelSpec& model);

// Sweep omega over the model range. Rows that hit a near-orthogonal selection
// or a failed fit are flagged, not fatal.
SweepResult run_sweep(const ModelSpec& model, SpectrumForm form, const SweepOptions& options = {});

// |slope| of the least-squares line through the valid rows inside the
// window, for both shift columns. Needs >= 3 rows per column.
Sensitivity sensitivity(const std::vector<SweepRow>& rows, OmegaWindow window);

// Linear-regime sensitivity (4 pi W^2/l0) |d Im A_w/d phi| (8 pi S/(l0 c)).
double closed_form_sensitivity(const ModelSpec& model);

// The four configurations of the published parameter table. The probe is
// supplied by the caller; the table does not state it.
std::vector<ModelSpec> table1_models(double lambda0_nm, double dlambda_nm);

} // namespace wva
