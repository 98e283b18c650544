#pragma once

#include "wva/spectrum.hpp"

namespace wva {

/// Starting point for the fitter, model peak * exp(-(l - center)^2 / width^2).
struct FitSeed
{
  double peak = 0.0;
  double center = 0.0;
  double width = 0.0;
};

struct FitResult
{
  double center = 0.0;
  double width = 0.0;
  double peak = 0.0;
  double residual_norm = 0.0; // ||y - f|| / ||y|| over the fit window
  int iterations = 0;
};

struct FitOptions
{
  int max_iterations = 200;
  double rel_step_tol = 1e-12;
  double initial_damping = 1e-3;
  std::size_t min_nonzero_points = 16;
};

// Intensity-weighted mean wavelength (trapezoidal quadrature).
double centroid(const SampledSpectrum& spec);

// Seed from the centroid, the second moment and the sample maximum.
FitSeed seed_from_moments(const SampledSpectrum& spec);

/*!
 * Least-squares Gaussian fit over |lambda - seed.center| <= window_half_width.
 *
 * Damped Gauss-Newton with the analytic Jacobian: damping (scaled by the
 * diagonal of J^T J) is multiplied by 10 after a step that raises the
 * residual and divided by 10 after one that lowers it. Stops once the
 * largest relative parameter change falls below options.rel_step_tol.
 *
 * Throws DegenerateInputError for fewer than options.min_nonzero_points
 * positive samples in the window, FitError if the iteration budget runs out
 * or the center leaves the sampled range.
 */
FitResult fit_center(const SampledSpectrum& spec, const FitSeed& seed, double window_half_width,
                     const FitOptions& options = {});

/// Moment seed and a +/- 2.5 * probe_width window around the centroid.
FitResult fit_center(const SampledSpectrum& spec, double probe_width, const FitOptions& options = {});

} // namespace wva
