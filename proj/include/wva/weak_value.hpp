#pragma once

#include <array>
#include <complex>

#include "wva/classical.hpp"

namespace wva {

using Complex = std::complex<double>;

/// Polarization ket in the {|H>, |V>} basis.
using Ket = std::array<Complex, 2>;

/// Below this |m+n| the post-selection is treated as orthogonal.
inline constexpr double kOverlapFloor = 1e-12;

/// Pre-selection angle, post-selection angle and the Sagnac phase they see.
struct SelectionConfig
{
  double alpha = 0.0;
  double beta = 0.0;
  double phi = 0.0;

  void validate() const;
};

struct WeakValueResult
{
  Complex m;       // amplitude riding on exp(-i g p), the |H> arm
  Complex n;       // amplitude riding on exp(+i g p), the |V> arm
  Complex overlap; // m + n = <phi_f|phi_i>
  Complex a_w;

  double postselect_probability() const { return std::norm(overlap); }
};

// Sagnac phase 8*pi*S*Omega / (lambda0*c); identical to 2*pi*fringe_shift.
double sagnac_phase(const InterferometerConfig& cfg, double omega);

struct Amplitudes
{
  Complex m;
  Complex n;
};

// m = -sin(a+b) cos(a) e^{i phi/2},  n = cos(a+b) sin(a) e^{-i phi/2}.
Amplitudes amplitudes_mn(const SelectionConfig& sel);

// Weak value (m - n)/(m + n). Throws NearOrthogonalError when |m+n| is at or
// below kOverlapFloor.
WeakValueResult weak_value(const SelectionConfig& sel);

/*!
 * Selection kets that reproduce amplitudes_mn() under the coupling
 * exp(-i g A p) with A = |H><H| - |V><V|:
 *
 *   |phi_i> =  cos(a)     |H> + sin(a)              |V>
 *   |phi_f> = -sin(a+b) e^{-i phi/2} |H> + cos(a+b) e^{i phi/2} |V>
 *
 * These are the textbook kets with the roles of sin and cos interchanged;
 * see printed_selection_states() for the other labelling.
 */
struct SelectionStates
{
  Ket pre;
  Ket post;
};
SelectionStates selection_states(const SelectionConfig& sel);

/// |phi_i> = sin(a)|H> + cos(a)|V>, |phi_f> = -cos(a+b)e^{-i phi/2}|H> +
/// sin(a+b)e^{i phi/2}|V>. With these kets <A>_w comes out as -conj(a_w):
/// the imaginary part, which drives the probe shift, is the same.
SelectionStates printed_selection_states(const SelectionConfig& sel);

// <f|A|i> / <f|i> evaluated with explicit 2-vectors and the observable
// diag(+1, -1). Independent route to weak_value().
Complex weak_value_direct(const Ket& pre, const Ket& post);
Complex weak_value_direct(const SelectionConfig& sel);

// Small-phi slope d(Im a_w)/d(phi) at phi = 0:
// -0.5 sin(2(a+b)) sin(2a) / sin^2(b).
double im_weak_value_slope(double alpha, double beta);

// First-order probe momentum shift 2 g W^2 Im(a_w).
double first_order_momentum_shift(double g, double width, Complex a_w);

} // namespace wva
