#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "wva/classical.hpp"
#include "wva/errors.hpp"

using namespace wva;

namespace {

const InterferometerConfig kRing = InterferometerConfig::from_nm(16.0, 1550.0);

} // namespace

TEST_CASE("fringe shift examples")
{
  CHECK(fringe_shift(kRing, 0.0) == 0.0);

  // 4 * 0.1 * 16 / (1550e-9 * 299792458), evaluated in long double.
  const long double oracle = 6.4L / (1550e-9L * 299792458.0L);
  CHECK(fringe_shift(kRing, 0.1) == doctest::Approx(static_cast<double>(oracle)).epsilon(1e-14));
  CHECK(fringe_shift(kRing, 0.1) == doctest::Approx(0.013773).epsilon(1e-4));

  const auto doubled = InterferometerConfig::from_nm(32.0, 1550.0);
  CHECK(fringe_shift(doubled, 0.1) == 2.0 * fringe_shift(kRing, 0.1));
}

TEST_CASE("fringe shift is odd in omega")
{
  for (double w : {1e-6, 0.013, 0.5, 7.0})
    CHECK(fringe_shift(kRing, -w) == -fringe_shift(kRing, w));
}

TEST_CASE("classical intensity examples")
{
  CHECK(classical_intensity(kRing, 1.0, 0.0) == 2.0);

  const auto modulated = InterferometerConfig::from_nm(16.0, 1550.0, std::numbers::pi);
  CHECK(std::abs(classical_intensity(modulated, 1.0, 0.0)) < 1e-15);

  const double dz = 6.4 / (1550e-9 * 299792458.0);
  CHECK(classical_intensity(kRing, 1.0, 0.1) ==
        doctest::Approx(1.0 + std::cos(2.0 * std::numbers::pi * dz)).epsilon(1e-12));
}

TEST_CASE("classical intensity bounds and periodicity")
{
  const double period = kRing.lambda0_m * kSpeedOfLight / (4.0 * kRing.area_s);
  for (int i = -500; i <= 500; ++i) {
    const double w = 0.0037 * i;
    const double a = 2.5;
    const double v = classical_intensity(kRing, a, w);
    CHECK(v >= 0.0);
    CHECK(v <= 2.0 * a);
    CHECK(classical_intensity(kRing, a, w + period) == doctest::Approx(v).scale(2.0 * a).epsilon(1e-9));
  }
}

TEST_CASE("classical errors")
{
  CHECK_THROWS_AS(fringe_shift(kRing, std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(fringe_shift(kRing, std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(classical_intensity(kRing, -1.0, 0.0), DomainError);
  CHECK_THROWS_AS(InterferometerConfig::from_nm(0.0, 1550.0), DomainError);
  CHECK_THROWS_AS(InterferometerConfig::from_nm(16.0, -1.0), DomainError);
  InterferometerConfig bad{16.0, 1.55e-6, std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(fringe_shift(bad, 0.1), DomainError);
}
