#include "wva/weak_value.hpp"

#include <cmath>
#include <numbers>

#include "wva/errors.hpp"

namespace wva {

namespace {

Complex half_phase(double phi)
{
  return {std::cos(0.5 * phi), std::sin(0.5 * phi)};
}

// num/den through conj(den)/|den|^2; exact when num is a real multiple of den.
Complex ratio(Complex num, Complex den)
{
  const double d2 = den.real() * den.real() + den.imag() * den.imag();
  const Complex t = num * std::conj(den);
  return {t.real() / d2, t.imag() / d2};
}

Complex inner(const Ket& bra, const Ket& ket)
{
  return std::conj(bra[0]) * ket[0] + std::conj(bra[1]) * ket[1];
}

} // namespace

void SelectionConfig::validate() const
{
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(phi))
    throw DomainError("selection angles and phase must be finite");
}

double sagnac_phase(const InterferometerConfig& cfg, double omega)
{
  return 2.0 * std::numbers::pi * fringe_shift(cfg, omega);
}

Amplitudes amplitudes_mn(const SelectionConfig& sel)
{
  sel.validate();
  const Complex e = half_phase(sel.phi);
  const double ab = sel.alpha + sel.beta;
  return {-std::sin(ab) * std::cos(sel.alpha) * e,
          std::cos(ab) * std::sin(sel.alpha) * std::conj(e)};
}

WeakValueResult weak_value(const SelectionConfig& sel)
{
  const auto [m, n] = amplitudes_mn(sel);
  const Complex overlap = m + n;
  if (std::abs(overlap) <= kOverlapFloor)
    throw NearOrthogonalError(std::abs(overlap));
  return {m, n, overlap, ratio(m - n, overlap)};
}

SelectionStates selection_states(const SelectionConfig& sel)
{
  sel.validate();
  const Complex e = half_phase(sel.phi);
  const double ab = sel.alpha + sel.beta;
  return {Ket{Complex(std::cos(sel.alpha)), Complex(std::sin(sel.alpha))},
          Ket{-std::sin(ab) * std::conj(e), std::cos(ab) * e}};
}

SelectionStates printed_selection_states(const SelectionConfig& sel)
{
  sel.validate();
  const Complex e = half_phase(sel.phi);
  const double ab = sel.alpha + sel.beta;
  return {Ket{Complex(std::sin(sel.alpha)), Complex(std::cos(sel.alpha))},
          Ket{-std::cos(ab) * std::conj(e), std::sin(ab) * e}};
}

Complex weak_value_direct(const Ket& pre, const Ket& post)
{
  const Ket a_pre{pre[0], -pre[1]};
  const Complex overlap = inner(post, pre);
  if (std::abs(overlap) <= kOverlapFloor)
    throw NearOrthogonalError(std::abs(overlap));
  return ratio(inner(post, a_pre), overlap);
}

Complex weak_value_direct(const SelectionConfig& sel)
{
  const auto states = selection_states(sel);
  return weak_value_direct(states.pre, states.post);
}

double im_weak_value_slope(double alpha, double beta)
{
  const double sb = std::sin(beta);
  if (std::abs(sb) <= kOverlapFloor)
    throw NearOrthogonalError(std::abs(sb));
  return -0.5 * std::sin(2.0 * (alpha + beta)) * std::sin(2.0 * alpha) / (sb * sb);
}

double first_order_momentum_shift(double g, double width, Complex a_w)
{
  return 2.0 * g * width * width * a_w.imag();
}

} // namespace wva
