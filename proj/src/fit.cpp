#include "wva/fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "wva/errors.hpp"

namespace wva {

namespace {

struct Moments
{
  double mass = 0.0;
  double first = 0.0;
  double second = 0.0;
};

// Trapezoidal integrals of I, I*l and I*(l - ref)^2.
Moments trapezoid_moments(const SampledSpectrum& spec, double ref)
{
  Moments mo;
  for (std::size_t i = 1; i < spec.size(); ++i) {
    const double h = spec.wavelengths[i] - spec.wavelengths[i - 1];
    const double l0 = spec.wavelengths[i - 1];
    const double l1 = spec.wavelengths[i];
    const double y0 = spec.intensities[i - 1];
    const double y1 = spec.intensities[i];
    mo.mass += 0.5 * h * (y0 + y1);
    mo.first += 0.5 * h * (y0 * l0 + y1 * l1);
    mo.second += 0.5 * h * (y0 * (l0 - ref) * (l0 - ref) + y1 * (l1 - ref) * (l1 - ref));
  }
  return mo;
}

} // namespace

double centroid(const SampledSpectrum& spec)
{
  spec.validate();
  if (spec.size() == 1) {
    if (!(spec.intensities[0] > 0.0))
      throw DegenerateInputError("centroid of a spectrum with zero total intensity");
    return spec.wavelengths[0];
  }
  const Moments mo = trapezoid_moments(spec, 0.0);
  if (!(mo.mass > 0.0))
    throw DegenerateInputError("centroid of a spectrum with zero total intensity");
  return mo.first / mo.mass;
}

FitSeed seed_from_moments(const SampledSpectrum& spec)
{
  const double c = centroid(spec);
  const Moments mo = trapezoid_moments(spec, c);
  const double var = mo.mass > 0.0 ? mo.second / mo.mass : 0.0;
  const double peak = *std::max_element(spec.intensities.begin(), spec.intensities.end());
  double width = std::sqrt(2.0 * var);
  if (!(width > 0.0))
    width = spec.wavelengths.back() - spec.wavelengths.front();
  return {peak, c, width};
}

FitResult fit_center(const SampledSpectrum& spec, const FitSeed& seed, double window_half_width,
                     const FitOptions& options)
{
  spec.validate();
  if (!(window_half_width > 0.0) || !std::isfinite(seed.center) || !(seed.width > 0.0))
    throw DomainError("fit seed needs a finite center, positive width and positive window");

  // Work in offsets from the seed center to keep the Jacobian well scaled.
  std::vector<double> xs;
  std::vector<double> ys;
  std::size_t nonzero = 0;
  double y_norm2 = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double x = spec.wavelengths[i] - seed.center;
    if (std::abs(x) > window_half_width)
      continue;
    xs.push_back(x);
    ys.push_back(spec.intensities[i]);
    y_norm2 += spec.intensities[i] * spec.intensities[i];
    if (spec.intensities[i] > 0.0)
      ++nonzero;
  }
  if (nonzero < options.min_nonzero_points)
    throw DegenerateInputError("fit window holds " + std::to_string(nonzero) +
                               " nonzero samples, need " +
                               std::to_string(options.min_nonzero_points));

  const std::size_t npts = xs.size();
  Eigen::Vector3d params(seed.peak > 0.0 ? seed.peak
                                         : *std::max_element(ys.begin(), ys.end()),
                         0.0, seed.width);

  auto cost_of = [&](const Eigen::Vector3d& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
      const double u = (xs[i] - q[1]) / q[2];
      const double r = ys[i] - q[0] * std::exp(-u * u);
      s += r * r;
    }
    return s;
  };

  double cost = cost_of(params);
  double damping = options.initial_damping;
  int iter = 0;
  bool converged = false;
  while (iter < options.max_iterations) {
    ++iter;
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < npts; ++i) {
      const double dx = xs[i] - params[1];
      const double w = params[2];
      const double e = std::exp(-(dx * dx) / (w * w));
      const double f = params[0] * e;
      const Eigen::Vector3d j(e, 2.0 * f * dx / (w * w), 2.0 * f * dx * dx / (w * w * w));
      jtj.noalias() += j * j.transpose();
      jtr += j * (ys[i] - f);
    }

    Eigen::Matrix3d lhs = jtj;
    lhs.diagonal() += damping * jtj.diagonal();
    const Eigen::Vector3d step = lhs.ldlt().solve(jtr);
    if (!step.allFinite())
      throw FitError("Gaussian fit produced a non-finite step", std::sqrt(cost / y_norm2));

    const double center_abs = std::abs(seed.center + params[1]);
    const double rel = std::max({std::abs(step[0]) / std::abs(params[0]),
                                 std::abs(step[1]) / std::max(center_abs, params[2]),
                                 std::abs(step[2]) / std::abs(params[2])});

    const Eigen::Vector3d trial = params + step;
    const double trial_cost = trial[2] > 0.0 ? cost_of(trial) : cost + 1.0;
    if (trial_cost <= cost) {
      params = trial;
      cost = trial_cost;
      damping = std::max(damping / 10.0, 1e-15);
    } else {
      damping *= 10.0;
    }
    if (rel < options.rel_step_tol) {
      converged = true;
      break;
    }
  }

  const double residual = y_norm2 > 0.0 ? std::sqrt(cost / y_norm2) : 0.0;
  if (!converged)
    throw FitError("Gaussian fit did not converge in " + std::to_string(options.max_iterations) +
                       " iterations",
                   residual);

  FitResult out;
  out.peak = params[0];
  out.center = seed.center + params[1];
  out.width = std::abs(params[2]);
  out.residual_norm = residual;
  out.iterations = iter;
  if (out.center < spec.wavelengths.front() || out.center > spec.wavelengths.back())
    throw FitError("fitted center left the sampled wavelength range", residual);
  return out;
}

FitResult fit_center(const SampledSpectrum& spec, double probe_width, const FitOptions& options)
{
  if (!(probe_width > 0.0))
    throw DomainError("probe width must be positive");
  return fit_center(spec, seed_from_moments(spec), 2.5 * probe_width, options);
}

} // namespace wva
