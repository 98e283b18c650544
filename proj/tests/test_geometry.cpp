#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "wva/errors.hpp"
#include "wva/geometry.hpp"

using namespace wva;

TEST_CASE("turns")
{
  CHECK(turns(25) == 5);
  CHECK(turns(45) == 1);
  CHECK_THROWS_AS(turns(90), DomainError);
  CHECK_THROWS_AS(turns(0), DomainError);
}

TEST_CASE("equivalent area")
{
  const double deg = std::numbers::pi / 180.0;
  CHECK(equivalent_area(25, 1.0) == doctest::Approx(36.0 * std::sin(65 * deg) * std::cos(65 * deg)).epsilon(1e-15));
  CHECK(equivalent_area(25, 1.0) == doctest::Approx(13.789).epsilon(1e-4));
  CHECK(std::abs(equivalent_area(25, 1.0) - 14.0) <= 0.02 * 14.0);
  CHECK(equivalent_area(45, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(equivalent_area(25, 2.0) == doctest::Approx(4.0 * equivalent_area(25, 1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(equivalent_area(25, 0.0), DomainError);
}

TEST_CASE("amplification ratio")
{
  CHECK(amplification_ratio(25) == doctest::Approx(3.447).epsilon(1e-3));
  CHECK(amplification_ratio(45) == doctest::Approx(0.5).epsilon(1e-15));
  const auto a = multipass_design(25, 0.37);
  const auto b = multipass_design(25, 11.0);
  CHECK(a.ratio_vs_square == doctest::Approx(b.ratio_vs_square).epsilon(1e-14));
}

TEST_CASE("loop closure invariants over all integer angles")
{
  for (int theta = 1; theta < 90; ++theta) {
    const long n = turns(theta);
    CHECK(n >= 1);
    CHECK((n * 360) % (2 * theta) == 0);
    if (360 % (2 * theta) == 0)
      CHECK(n == 1);
    CHECK(equivalent_area(theta, 3.0) == doctest::Approx(9.0 * equivalent_area(theta, 1.0)).epsilon(1e-14));
    CHECK(equivalent_area(theta, 1.0) > 0.0);
  }
}

TEST_CASE("angles must be integral degrees")
{
  CHECK(checked_theta_deg(25.0) == 25);
  CHECK_THROWS_AS(checked_theta_deg(25.5), DomainError);
  CHECK_THROWS_AS(checked_theta_deg(90.0), DomainError);
  CHECK_THROWS_AS(checked_theta_deg(-3.0), DomainError);
  CHECK_THROWS_AS(checked_theta_deg(std::nan("")), DomainError);
}
