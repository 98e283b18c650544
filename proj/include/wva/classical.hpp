#pragma once

namespace wva {

/// Speed of light in vacuum, m/s (exact SI value).
inline constexpr double kSpeedOfLight = 299792458.0;

/// Geometry and source of a Sagnac loop. Wavelength is stored in meters;
/// use from_nm() at interfaces that speak nanometers.
struct InterferometerConfig
{
  double area_s = 0.0;    // enclosed loop area, m^2
  double lambda0_m = 0.0; // vacuum center wavelength, m
  double mod_phase = 0.0; // constant modulation phase, rad

  static InterferometerConfig from_nm(double area_s, double lambda0_nm, double mod_phase = 0.0);

  // Throws DomainError unless area and wavelength are finite and positive.
  void validate() const;
};

// Fringe shift 4*Omega*S / (lambda0*c) of the classical interferometer.
double fringe_shift(const InterferometerConfig& cfg, double omega);

// Intensity A*[1 + cos(2*pi*dz + mod_phase)] recorded at the output port.
double classical_intensity(const InterferometerConfig& cfg, double amplitude, double omega);

} // namespace wva
