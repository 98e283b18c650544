#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wva/errors.hpp"
#include "wva/spectrum.hpp"
#include "wva/weak_value.hpp"

using namespace wva;

namespace {

double rel_diff(Complex a, Complex b)
{
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace

TEST_CASE("sagnac phase")
{
  const auto big = InterferometerConfig::from_nm(16.0, 1550.0);
  const auto small = InterferometerConfig::from_nm(3.0, 1550.0);
  CHECK(sagnac_phase(big, 0.0) == 0.0);
  CHECK(sagnac_phase(big, 0.1) == doctest::Approx(2.0 * std::numbers::pi * 0.0137728).epsilon(1e-5));
  CHECK(sagnac_phase(big, 0.1) == doctest::Approx(0.08654).epsilon(1e-3));
  CHECK(sagnac_phase(small, 0.1) / sagnac_phase(big, 0.1) == doctest::Approx(3.0 / 16.0).epsilon(1e-15));

  for (double w : {-3.0, -0.02, 1e-7, 0.4})
    CHECK(sagnac_phase(big, w) == 2.0 * std::numbers::pi * fringe_shift(big, w));
}

TEST_CASE("amplitudes m and n")
{
  const auto zero_m = amplitudes_mn({0.1, -0.1, 1.234});
  CHECK(zero_m.m == Complex(0.0, 0.0));

  const auto real = amplitudes_mn({0.1, -0.5, 0.0});
  CHECK(real.m.real() == doctest::Approx(-std::sin(-0.4) * std::cos(0.1)));
  CHECK(real.n.real() == doctest::Approx(std::cos(-0.4) * std::sin(0.1)));
  CHECK(real.m.imag() == 0.0);
  CHECK(real.n.imag() == 0.0);
}

TEST_CASE("weak value closed forms")
{
  CHECK(weak_value({0.1, -0.1, 0.0}).a_w == Complex(-1.0, 0.0));
  CHECK(weak_value({0.1, -0.1, 2.7}).a_w == Complex(-1.0, 0.0));

  const auto wv = weak_value({0.1, -0.5, 0.0});
  CHECK(wv.a_w.imag() == 0.0);
  CHECK(wv.a_w.real() == doctest::Approx(std::sin(-0.3) / std::sin(-0.5)).epsilon(1e-14));
  CHECK(wv.a_w.real() == doctest::Approx(0.61640).epsilon(1e-5));
  CHECK(rel_diff(weak_value_direct(SelectionConfig{0.1, -0.5, 0.0}), wv.a_w) < 1e-12);
}

TEST_CASE("small-phi slope of Im a_w matches central finite differences")
{
  const double alpha = 0.1;
  const double h = 1e-5;
  for (double mag = 0.05; mag <= 1.0 + 1e-12; mag += 0.05) {
    for (double beta : {-mag, mag}) {
      const double closed = im_weak_value_slope(alpha, beta);
      if (std::abs(std::sin(2.0 * (alpha + beta))) < 1e-9) {
        // beta = -alpha: m vanishes and the slope is identically zero.
        CHECK(std::abs(closed) < 1e-12);
        continue;
      }
      const double fd = (weak_value({alpha, beta, h}).a_w.imag() - weak_value({alpha, beta, -h}).a_w.imag()) /
                        (2.0 * h);
      CAPTURE(beta);
      CHECK(std::abs(fd - closed) <= 1e-6 * std::abs(closed));
    }
  }
}

TEST_CASE("closed form and direct inner products agree on random selections")
{
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> phase(-10.0, 10.0);
  int checked = 0;
  while (checked < 1000) {
    const SelectionConfig sel{angle(rng), angle(rng), phase(rng)};
    const auto mn = amplitudes_mn(sel);
    if (std::abs(mn.m + mn.n) <= 1e-6)
      continue;
    const auto wv = weak_value(sel);
    CHECK(rel_diff(weak_value_direct(sel), wv.a_w) < 1e-12);
    CHECK(std::abs(wv.a_w * wv.overlap - (wv.m - wv.n)) <= 1e-12 * std::max(std::abs(wv.m - wv.n), 1e-300));
    CHECK(wv.postselect_probability() >= 0.0);
    CHECK(wv.postselect_probability() <= 1.0 + 1e-15);

    // The alternative labelling returns -conj(a_w): same imaginary part.
    const auto printed = printed_selection_states(sel);
    CHECK(rel_diff(weak_value_direct(printed.pre, printed.post), -std::conj(wv.a_w)) < 1e-12);
    ++checked;
  }
}

TEST_CASE("selection kets are normalized and reproduce m, n")
{
  const SelectionConfig sel{0.37, -0.81, 0.42};
  const auto st = selection_states(sel);
  CHECK(std::norm(st.pre[0]) + std::norm(st.pre[1]) == doctest::Approx(1.0));
  CHECK(std::norm(st.post[0]) + std::norm(st.post[1]) == doctest::Approx(1.0));
  const auto mn = amplitudes_mn(sel);
  CHECK(std::abs(std::conj(st.post[0]) * st.pre[0] - mn.m) < 1e-15);
  CHECK(std::abs(std::conj(st.post[1]) * st.pre[1] - mn.n) < 1e-15);
}

TEST_CASE("weak value is real at zero phase")
{
  for (double a = -1.5; a < 1.5; a += 0.13)
    for (double b = -1.5; b < 1.5; b += 0.17) {
      const auto mn = amplitudes_mn({a, b, 0.0});
      CHECK(mn.m.imag() == 0.0);
      CHECK(mn.n.imag() == 0.0);
      if (std::abs(mn.m + mn.n) > kOverlapFloor)
        CHECK(weak_value({a, b, 0.0}).a_w.imag() == 0.0);
    }
}

TEST_CASE("orthogonal selection is rejected")
{
  // alpha = 0.1, beta = 0: m + n = -sin(0.1)cos(0.1) + cos(0.1)sin(0.1) = 0.
  CHECK_THROWS_AS(weak_value({0.1, 0.0, 0.0}), NearOrthogonalError);
  CHECK_THROWS_AS(weak_value_direct(SelectionConfig{0.1, 0.0, 0.0}), NearOrthogonalError);
  CHECK_THROWS_AS(weak_value({std::nan(""), 0.0, 0.0}), DomainError);
}

TEST_CASE("first-order momentum shift")
{
  CHECK(first_order_momentum_shift(3.0, 2.0, Complex(0.7, 0.0)) == 0.0);
  CHECK(first_order_momentum_shift(1.0, 1.0, Complex(0.0, 1.0)) == 2.0);
  CHECK(first_order_momentum_shift(2.0, 1.5, Complex(0.3, 0.2)) ==
        2.0 * first_order_momentum_shift(1.0, 1.5, Complex(0.3, 0.2)));
}

TEST_CASE("analytic wavelength shift")
{
  const SpectrumModel probe{1.0, 1550.0, 10.0};
  CHECK(analytic_wavelength_shift(probe, Complex(0.4, 0.0)) == 0.0);
  CHECK(analytic_wavelength_shift(probe, Complex(0.0, 0.01)) ==
        doctest::Approx(-4.0 * std::numbers::pi * 100.0 / 1550.0 * 0.01).epsilon(1e-15));
  CHECK(analytic_wavelength_shift(probe, Complex(0.0, 0.01)) == doctest::Approx(-0.008107).epsilon(1e-4));
  const SpectrumModel wide{1.0, 1550.0, 20.0};
  CHECK(analytic_wavelength_shift(wide, Complex(0.0, 0.01)) ==
        doctest::Approx(4.0 * analytic_wavelength_shift(probe, Complex(0.0, 0.01))).epsilon(1e-15));
}
