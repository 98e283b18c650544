#include "wva/classical.hpp"

#include <cmath>
#include <numbers>

#include "wva/errors.hpp"

namespace wva {

InterferometerConfig InterferometerConfig::from_nm(double area_s, double lambda0_nm, double mod_phase)
{
  InterferometerConfig cfg{area_s, lambda0_nm * 1e-9, mod_phase};
  cfg.validate();
  return cfg;
}

void InterferometerConfig::validate() const
{
  if (!std::isfinite(area_s) || area_s <= 0.0)
    throw DomainError("loop area must be finite and positive");
  if (!std::isfinite(lambda0_m) || lambda0_m <= 0.0)
    throw DomainError("center wavelength must be finite and positive");
  if (!std::isfinite(mod_phase))
    throw DomainError("modulation phase must be finite");
}

double fringe_shift(const InterferometerConfig& cfg, double omega)
{
  cfg.validate();
  if (!std::isfinite(omega))
    throw DomainError("angular rate must be finite");
  return 4.0 * omega * cfg.area_s / (cfg.lambda0_m * kSpeedOfLight);
}

double classical_intensity(const InterferometerConfig& cfg, double amplitude, double omega)
{
  if (!std::isfinite(amplitude) || amplitude < 0.0)
    throw DomainError("intensity amplitude must be finite and nonnegative");
  const double dz = fringe_shift(cfg, omega);
  return amplitude * (1.0 + std::cos(2.0 * std::numbers::pi * dz + cfg.mod_phase));
}

} // namespace wva
