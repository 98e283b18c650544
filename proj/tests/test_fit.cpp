#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wva/errors.hpp"
#include "wva/fit.hpp"

using namespace wva;

namespace {

SampledSpectrum gaussian(double i0, double center, double width, double lo, double hi, std::size_t n)
{
  SampledSpectrum s;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double u = (l - center) / width;
    s.wavelengths.push_back(l);
    s.intensities.push_back(i0 * std::exp(-u * u));
  }
  return s;
}

bool rel_close(double a, double b, double tol)
{
  return std::abs(a - b) <= tol * std::abs(b);
}

} // namespace

TEST_CASE("fit recovers an exact Gaussian")
{
  const auto spec = gaussian(3.5, 1550.0, 10.0, 1510.0, 1590.0, 2048);
  const FitResult fit = fit_center(spec, 10.0);
  CHECK(rel_close(fit.peak, 3.5, 1e-10));
  CHECK(rel_close(fit.center, 1550.0, 1e-10));
  CHECK(rel_close(fit.width, 10.0, 1e-10));
  CHECK(fit.residual_norm >= 0.0);
  CHECK(fit.residual_norm < 1e-10);
  CHECK(fit.iterations > 0);
}

TEST_CASE("fit follows a translated Gaussian")
{
  const auto spec = gaussian(1.0, 1550.5, 10.0, 1510.0, 1590.0, 2048);
  const FitResult fit = fit_center(spec, 10.0);
  CHECK(std::abs(fit.center - 1550.5) <= 1e-10 * 1550.5);
}

TEST_CASE("fit is exact for any grid density from 64 points over +/-4W")
{
  for (std::size_t n : {64u, 65u, 100u, 333u, 1024u, 4096u}) {
    const auto spec = gaussian(0.8, 800.0, 6.0, 776.0, 824.0, n);
    const FitResult fit = fit_center(spec, 6.0);
    CAPTURE(n);
    CHECK(rel_close(fit.center, 800.0, 1e-10));
    CHECK(rel_close(fit.width, 6.0, 1e-10));
    CHECK(rel_close(fit.peak, 0.8, 1e-10));
  }
}

TEST_CASE("explicit seed and window")
{
  const auto spec = gaussian(2.0, 1000.0, 4.0, 980.0, 1020.0, 801);
  const FitResult fit = fit_center(spec, FitSeed{1.0, 1001.0, 5.0}, 10.0);
  CHECK(rel_close(fit.center, 1000.0, 1e-10));
}

TEST_CASE("centroid")
{
  const auto sym = gaussian(1.0, 1550.0, 10.0, 1510.0, 1590.0, 2049);
  CHECK(centroid(sym) == doctest::Approx(1550.0).epsilon(1e-14));

  SampledSpectrum two;
  for (int i = -5; i <= 5; ++i) {
    two.wavelengths.push_back(1550.0 + i);
    two.intensities.push_back(std::abs(i) == 1 ? 1.0 : 0.0);
  }
  CHECK(centroid(two) == doctest::Approx(1550.0).epsilon(1e-15));

  SampledSpectrum single;
  for (int i = 0; i < 10; ++i) {
    single.wavelengths.push_back(1500.0 + 0.7 * i * i);
    single.intensities.push_back(i == 6 ? 4.0 : 0.0);
  }
  CHECK(centroid(single) == doctest::Approx(1500.0 + 0.7 * 36).epsilon(1e-15));
}

TEST_CASE("degenerate inputs")
{
  auto flat = gaussian(1.0, 1550.0, 10.0, 1510.0, 1590.0, 256);
  std::fill(flat.intensities.begin(), flat.intensities.end(), 0.0);
  CHECK_THROWS_AS(centroid(flat), DegenerateInputError);
  CHECK_THROWS_AS(fit_center(flat, 10.0), DegenerateInputError);

  // Only 10 positive samples inside the window.
  auto sparse = gaussian(1.0, 1550.0, 10.0, 1510.0, 1590.0, 256);
  for (std::size_t i = 0; i < sparse.size(); ++i)
    if (i < 120 || i >= 130)
      sparse.intensities[i] = 0.0;
  CHECK_THROWS_AS(fit_center(sparse, 10.0), DegenerateInputError);

  SampledSpectrum empty;
  CHECK_THROWS_AS(centroid(empty), DomainError);
}

TEST_CASE("iteration budget exhaustion reports the residual")
{
  const auto spec = gaussian(1.0, 1550.0, 10.0, 1510.0, 1590.0, 2048);
  FitOptions opts;
  opts.max_iterations = 1;
  try {
    fit_center(spec, FitSeed{0.5, 1545.0, 14.0}, 25.0, opts);
    FAIL("expected FitError");
  } catch (const FitError& e) {
    CHECK(e.last_residual() > 0.0);
  }
}
