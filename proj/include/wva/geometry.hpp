#pragma once

namespace wva {

/// Curved-mirror multipass loop: the beam enters at theta_r degrees and
/// circulates until its chord pattern closes.
struct MultipassDesign
{
  int theta_deg = 0;
  double radius_rs = 0.0; // m
  long n_turns = 0;
  double area_equiv = 0.0; // m^2
  double ratio_vs_square = 0.0;
};

// Rejects non-integral or out-of-range (0, 90) angles with DomainError and
// returns the integral value otherwise.
int checked_theta_deg(double theta_deg);

// N_r = lcm(2 theta, 360) / 360.
long turns(int theta_deg);

// S_r = lcm(2 theta, 360)/(2 theta) * Rs^2 sin(beta_r) cos(beta_r),
// beta_r = 90 deg - theta.
double equivalent_area(int theta_deg, double radius_rs);

// S_r / (4 Rs^2): gain over a square loop of side 2 Rs.
double amplification_ratio(int theta_deg);

MultipassDesign multipass_design(int theta_deg, double radius_rs);

} // namespace wva
