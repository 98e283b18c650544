#include "wva/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wva/errors.hpp"

namespace wva {

std::string_view to_string(SpectrumForm form)
{
  return form == SpectrumForm::paper ? "paper" : "exact";
}

SpectrumForm spectrum_form_from_string(std::string_view text)
{
  if (text == "paper")
    return SpectrumForm::paper;
  if (text == "exact")
    return SpectrumForm::exact;
  throw DomainError("unknown spectrum form '" + std::string(text) + "'");
}

std::string_view to_string(ProbeEnvelope env)
{
  return env == ProbeEnvelope::std_dev ? "std_dev" : "squared";
}

ProbeEnvelope probe_envelope_from_string(std::string_view text)
{
  if (text == "std_dev")
    return ProbeEnvelope::std_dev;
  if (text == "squared")
    return ProbeEnvelope::squared_amplitude;
  throw DomainError("unknown probe envelope '" + std::string(text) + "'");
}

void SpectrumModel::validate() const
{
  if (!std::isfinite(i0) || i0 <= 0.0)
    throw DomainError("peak intensity must be finite and positive");
  if (!std::isfinite(lambda0) || lambda0 <= 0.0)
    throw DomainError("center wavelength must be finite and positive");
  if (!std::isfinite(width) || width <= 0.0 || width >= lambda0)
    throw DomainError("spectral width must satisfy 0 < width < lambda0");
}

void SampledSpectrum::validate() const
{
  if (wavelengths.empty())
    throw DomainError("empty spectrum");
  if (wavelengths.size() != intensities.size())
    throw DomainError("wavelength and intensity arrays differ in length");
  for (std::size_t i = 0; i < wavelengths.size(); ++i) {
    if (!std::isfinite(wavelengths[i]) || !std::isfinite(intensities[i]))
      throw DomainError("spectrum contains non-finite values");
    if (intensities[i] < 0.0)
      throw DomainError("spectrum contains negative intensity");
    if (i > 0 && !(wavelengths[i] > wavelengths[i - 1]))
      throw DomainError("wavelength grid must be strictly increasing");
  }
}

double input_spectrum(const SpectrumModel& probe, double lambda)
{
  const double u = (lambda - probe.lambda0) / probe.width;
  return probe.i0 * std::exp(-u * u);
}

double probe_intensity(const SpectrumModel& probe, double lambda)
{
  const double u = (lambda - probe.lambda0) / probe.width;
  switch (probe.envelope) {
  case ProbeEnvelope::squared_amplitude:
    return probe.i0 * std::exp(-2.0 * u * u);
  case ProbeEnvelope::std_dev:
    break;
  }
  return probe.i0 * std::exp(-0.5 * u * u);
}

double output_intensity(const WeakValueResult& wv, double pg, double envelope, SpectrumForm form)
{
  const double c = std::cos(pg);
  const double s = std::sin(pg);
  if (form == SpectrumForm::paper) {
    const double t = c + wv.a_w.imag() * s;
    return std::norm(wv.overlap) * t * t * envelope;
  }
  // Full modulus of m e^{-i pg} + n e^{+i pg}.
  const Complex e(c, s);
  return std::norm(wv.m * std::conj(e) + wv.n * e) * envelope;
}

std::vector<double> default_grid(const SpectrumModel& probe, std::size_t points, double half_widths)
{
  probe.validate();
  if (points < 2)
    throw DomainError("grid needs at least two points");
  const double lo = probe.lambda0 - half_widths * probe.width;
  const double hi = probe.lambda0 + half_widths * probe.width;
  if (lo <= 0.0)
    throw DomainError("grid extends to nonpositive wavelengths");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

SampledSpectrum output_spectrum(const SpectrumModel& probe, const WeakValueResult& wv, double g,
                                std::span<const double> grid, SpectrumForm form)
{
  probe.validate();
  if (grid.empty())
    throw DomainError("empty wavelength grid");
  if (!std::isfinite(g) || g <= 0.0)
    throw DomainError("coupling g must be finite and positive");

  SampledSpectrum out;
  out.form = form;
  out.wavelengths.assign(grid.begin(), grid.end());
  out.intensities.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double lambda = grid[i];
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw DomainError("grid wavelengths must be finite and positive");
    if (i > 0 && !(lambda > grid[i - 1]))
      throw DomainError("wavelength grid must be strictly increasing");
    const double p = 2.0 * std::numbers::pi / lambda;
    out.intensities[i] = output_intensity(wv, p * g, probe_intensity(probe, lambda), form);
  }
  return out;
}

double analytic_wavelength_shift(const SpectrumModel& probe, Complex a_w)
{
  probe.validate();
  return -4.0 * std::numbers::pi * probe.width * probe.width / probe.lambda0 * a_w.imag();
}

} // namespace wva
