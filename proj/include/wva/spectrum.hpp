#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "wva/weak_value.hpp"

namespace wva {

enum class SpectrumForm
{
  paper, // |m+n|^2 |cos(pg) + Im(A_w) sin(pg)|^2 |Gamma|^2
  exact, // |m e^{-igp} + n e^{igp}|^2 |Gamma|^2
};

std::string_view to_string(SpectrumForm form);
SpectrumForm spectrum_form_from_string(std::string_view text);

/*!
 * How the probe intensity |Gamma_i(p)|^2 is built from the Gaussian
 * I0 exp(-(l - l0)^2 / W^2).
 *
 * std_dev: I0 exp(-(l - l0)^2 / (2 W^2)). W is the standard deviation of the
 *   probe intensity, the width for which the first-order shift
 *   -4 pi W^2 Im(A_w) / l0 is the mean shift of the output spectrum.
 * squared_amplitude: the Gaussian squared, I0 exp(-2 (l - l0)^2 / W^2). Its
 *   variance is W^2/4, so the fitted shift is a quarter of the first-order
 *   formula.
 */
enum class ProbeEnvelope
{
  std_dev,
  squared_amplitude,
};

std::string_view to_string(ProbeEnvelope env);
ProbeEnvelope probe_envelope_from_string(std::string_view text);

/// Gaussian input spectrum. Wavelengths in nm.
struct SpectrumModel
{
  double i0 = 1.0;
  double lambda0 = 0.0;
  double width = 0.0;
  ProbeEnvelope envelope = ProbeEnvelope::std_dev;

  void validate() const;

  // Default coupling g = lambda0 (nm), so that p*g = 2*pi*lambda0/lambda.
  double coupling() const { return lambda0; }
};

struct SampledSpectrum
{
  std::vector<double> wavelengths; // nm, strictly increasing
  std::vector<double> intensities;
  SpectrumForm form = SpectrumForm::exact;

  std::size_t size() const { return wavelengths.size(); }
  void validate() const;
};

// I0 exp(-(lambda - lambda0)^2 / W^2).
double input_spectrum(const SpectrumModel& probe, double lambda);

// |Gamma_i(p)|^2 at p = 2*pi/lambda under probe.envelope.
double probe_intensity(const SpectrumModel& probe, double lambda);

// Post-selected intensity for one probe momentum, given phase p*g and the
// input envelope value at that momentum.
double output_intensity(const WeakValueResult& wv, double pg, double envelope, SpectrumForm form);

/// Uniform grid of `points` samples over lambda0 +/- half_widths * W.
std::vector<double> default_grid(const SpectrumModel& probe, std::size_t points = 2048,
                                 double half_widths = 4.0);

SampledSpectrum output_spectrum(const SpectrumModel& probe, const WeakValueResult& wv, double g,
                                std::span<const double> grid, SpectrumForm form);

// First-order center-wavelength shift -4 pi W^2 Im(a_w) / lambda0, in nm.
double analytic_wavelength_shift(const SpectrumModel& probe, Complex a_w);

} // namespace wva
