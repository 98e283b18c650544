#pragma once

#include <span>
#include <string>
#include <vector>

#include "wva/spectrum.hpp"

namespace wva {

/// What the experiment has to achieve. probe.i0 is the source peak intensity.
struct DesignConstraints
{
  SpectrumModel probe;
  double i_min = 0.0;            // spectrometer detection floor, same units as probe.i0
  double delta_lambda_res = 0.0; // smallest resolvable center shift, nm
  double omega_target = 0.0;     // rotation rate that must be resolved, rad/s
  double alpha = 0.0;            // fixed pre-selection angle, rad

  double i0() const { return probe.i0; }
  void validate() const;
};

struct FeasibilityReport
{
  bool feasible = false;
  double peak_intensity = 0.0;   // max of the post-selected spectrum at omega_target
  double shift = 0.0;            // |fitted center(omega_target) - fitted center(0)|, nm
  double intensity_margin = 0.0; // peak_intensity - i_min
  double shift_margin = 0.0;     // shift - delta_lambda_res
  double im_aw = 0.0;
  std::string reason; // why infeasible; empty otherwise
};

struct DesignSolution
{
  double beta = 0.0;
  double area_s_min = 0.0; // m^2; NaN when infeasible
  double k_achieved = 0.0; // shift / omega_target, nm/(rad/s)
  double peak_intensity = 0.0;
  double shift = 0.0;
  bool feasible = false;
  std::vector<std::string> warnings;
};

struct DesignOptions
{
  std::size_t grid_points = 2048;
  double rel_tol = 1e-4;        // bisection stop on S
  int probe_points = 8;         // monotonicity probes per beta
  int scan_points = 1000;       // fallback scan resolution
  double linear_im_aw = 0.05;   // |Im A_w| bound of the verified-monotone regime
};

FeasibilityReport feasible(double beta, double area_s, const DesignConstraints& constraints,
                           const DesignOptions& options = {});

/*!
 * Smallest loop area in [area_lo, area_hi] that meets the constraints for
 * some beta in beta_grid.
 *
 * Per beta, the shift and feasibility are probed at options.probe_points
 * evenly spaced areas. When the shift is nondecreasing, the feasibility
 * pattern is monotone and |Im A_w| stays inside the linear regime, the first
 * feasible area is bracketed and bisected; otherwise a scan of
 * options.scan_points areas is bisected instead and a warning is attached.
 * Equal areas prefer smaller |beta|, then smaller beta.
 */
DesignSolution min_area(const DesignConstraints& constraints, std::span<const double> beta_grid,
                        double area_lo, double area_hi, const DesignOptions& options = {});

} // namespace wva
