#include "wva/geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "wva/errors.hpp"

namespace wva {

namespace {

void check_theta(int theta_deg)
{
  if (theta_deg <= 0 || theta_deg >= 90)
    throw DomainError("injection angle must lie strictly between 0 and 90 degrees, got " +
                      std::to_string(theta_deg));
}

long closing_arc_deg(int theta_deg)
{
  return std::lcm(2L * theta_deg, 360L);
}

} // namespace

int checked_theta_deg(double theta_deg)
{
  if (!std::isfinite(theta_deg) || theta_deg != std::floor(theta_deg))
    throw DomainError("injection angle must be an integral number of degrees");
  if (theta_deg <= 0.0 || theta_deg >= 90.0)
    throw DomainError("injection angle must lie strictly between 0 and 90 degrees");
  return static_cast<int>(theta_deg);
}

long turns(int theta_deg)
{
  check_theta(theta_deg);
  return closing_arc_deg(theta_deg) / 360L;
}

double equivalent_area(int theta_deg, double radius_rs)
{
  check_theta(theta_deg);
  if (!std::isfinite(radius_rs) || radius_rs <= 0.0)
    throw DomainError("device radius must be finite and positive");
  const double chords = static_cast<double>(closing_arc_deg(theta_deg)) / (2.0 * theta_deg);
  const double beta_r = (90.0 - theta_deg) * std::numbers::pi / 180.0;
  return chords * radius_rs * radius_rs * std::sin(beta_r) * std::cos(beta_r);
}

double amplification_ratio(int theta_deg)
{
  return equivalent_area(theta_deg, 1.0) / 4.0;
}

MultipassDesign multipass_design(int theta_deg, double radius_rs)
{
  MultipassDesign d;
  d.theta_deg = theta_deg;
  d.radius_rs = radius_rs;
  d.n_turns = turns(theta_deg);
  d.area_equiv = equivalent_area(theta_deg, radius_rs);
  d.ratio_vs_square = d.area_equiv / (4.0 * radius_rs * radius_rs);
  return d;
}

} // namespace wva
