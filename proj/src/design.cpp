#include "wva/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <fmt/format.h>

#include "wva/errors.hpp"
#include "wva/fit.hpp"

namespace wva {

void DesignConstraints::validate() const
{
  probe.validate();
  if (!std::isfinite(i_min) || i_min < 0.0 || !(i_min < probe.i0))
    throw DomainError("detection floor must satisfy 0 <= i_min < i0");
  if (!std::isfinite(delta_lambda_res) || delta_lambda_res < 0.0)
    throw DomainError("resolvable shift must be finite and nonnegative");
  if (!std::isfinite(omega_target) || omega_target <= 0.0)
    throw DomainError("target rotation rate must be finite and positive");
  if (!std::isfinite(alpha))
    throw DomainError("pre-selection angle must be finite");
}

namespace {

// Evaluates feasibility along S for one beta; the omega = 0 reference center
// does not depend on S and is computed once.
class BetaEvaluator
{
public:
  BetaEvaluator(const DesignConstraints& c, double beta, const DesignOptions& options)
    : c_(c), beta_(beta), grid_(default_grid(c.probe, options.grid_points))
  {
    try {
      const auto wv0 = weak_value({c.alpha, beta, 0.0});
      const auto spec0 = output_spectrum(c_.probe, wv0, c_.probe.coupling(), grid_, SpectrumForm::exact);
      reference_ = fit_center(spec0, c_.probe.width).center;
    } catch (const Error& e) {
      reference_error_ = e.what();
    }
  }

  FeasibilityReport operator()(double area_s) const
  {
    FeasibilityReport r;
    const auto cfg = InterferometerConfig::from_nm(area_s, c_.probe.lambda0);
    const double phi = sagnac_phase(cfg, c_.omega_target);
    WeakValueResult wv;
    try {
      wv = weak_value({c_.alpha, beta_, phi});
    } catch (const NearOrthogonalError& e) {
      r.reason = e.what();
      r.intensity_margin = -c_.i_min;
      r.shift_margin = -c_.delta_lambda_res;
      return r;
    }
    r.im_aw = wv.a_w.imag();
    const auto spec = output_spectrum(c_.probe, wv, c_.probe.coupling(), grid_, SpectrumForm::exact);
    r.peak_intensity = *std::max_element(spec.intensities.begin(), spec.intensities.end());
    r.intensity_margin = r.peak_intensity - c_.i_min;

    if (!reference_) {
      r.reason = "reference fit failed: " + reference_error_;
      r.shift_margin = -c_.delta_lambda_res;
      return r;
    }
    try {
      r.shift = std::abs(fit_center(spec, c_.probe.width).center - *reference_);
    } catch (const Error& e) {
      r.reason = std::string("fit failed: ") + e.what();
      r.shift_margin = -c_.delta_lambda_res;
      return r;
    }
    r.shift_margin = r.shift - c_.delta_lambda_res;

    if (r.intensity_margin < 0.0)
      r.reason = "peak intensity below detection floor";
    else if (r.shift_margin < 0.0)
      r.reason = "center shift below resolvable shift";
    r.feasible = r.reason.empty();
    return r;
  }

private:
  const DesignConstraints& c_;
  double beta_;
  std::vector<double> grid_;
  std::optional<double> reference_;
  std::string reference_error_;
};

struct BetaOutcome
{
  std::optional<double> area;
  FeasibilityReport report;
  std::vector<std::string> warnings;
};

double area_at(double lo, double hi, int i, int n)
{
  if (i == n - 1)
    return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

// lo infeasible, hi feasible.
BetaOutcome bisect(const BetaEvaluator& eval, double lo, double hi, FeasibilityReport hi_report,
                   double rel_tol)
{
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    FeasibilityReport r = eval(mid);
    if (r.feasible) {
      hi = mid;
      hi_report = std::move(r);
    } else {
      lo = mid;
    }
  }
  return {hi, std::move(hi_report), {}};
}

BetaOutcome solve_beta(const DesignConstraints& c, double beta, double lo, double hi,
                       const DesignOptions& options)
{
  const BetaEvaluator eval(c, beta, options);

  const int np = std::max(options.probe_points, 2);
  std::vector<double> areas(static_cast<std::size_t>(np));
  std::vector<FeasibilityReport> probes(static_cast<std::size_t>(np));
  for (int i = 0; i < np; ++i) {
    areas[static_cast<std::size_t>(i)] = area_at(lo, hi, i, np);
    probes[static_cast<std::size_t>(i)] = eval(areas[static_cast<std::size_t>(i)]);
  }

  std::string violation;
  for (std::size_t i = 0; i < probes.size() && violation.empty(); ++i) {
    if (!std::isfinite(probes[i].im_aw) || std::abs(probes[i].im_aw) > options.linear_im_aw)
      violation = fmt::format("|Im A_w| = {:.3g} exceeds {:.3g} at S = {:.6g}",
                              std::abs(probes[i].im_aw), options.linear_im_aw, areas[i]);
    else if (i > 0 && probes[i].shift < probes[i - 1].shift)
      violation = fmt::format("shift decreases between S = {:.6g} and S = {:.6g}", areas[i - 1], areas[i]);
    else if (i > 0 && probes[i - 1].feasible && !probes[i].feasible)
      violation = fmt::format("feasibility lost between S = {:.6g} and S = {:.6g}", areas[i - 1], areas[i]);
  }

  if (violation.empty()) {
    if (probes.front().feasible)
      return {lo, probes.front(), {}};
    for (std::size_t i = 1; i < probes.size(); ++i)
      if (probes[i].feasible)
        return bisect(eval, areas[i - 1], areas[i], probes[i], options.rel_tol);
    return {std::nullopt, probes.back(), {}};
  }

  BetaOutcome out;
  const std::string warning =
    fmt::format("beta = {:.17g}: monotone regime not verified ({}); used {}-point scan", beta, violation,
                options.scan_points);
  const int ns = std::max(options.scan_points, 2);
  double prev = lo;
  for (int i = 0; i < ns; ++i) {
    const double s = area_at(lo, hi, i, ns);
    FeasibilityReport r = eval(s);
    if (r.feasible) {
      out = i == 0 ? BetaOutcome{lo, std::move(r), {}} : bisect(eval, prev, s, std::move(r), options.rel_tol);
      out.warnings.push_back(warning);
      return out;
    }
    prev = s;
    out.report = std::move(r);
  }
  out.warnings.push_back(warning);
  return out;
}

bool preferred(double area, double beta, double best_area, double best_beta)
{
  if (area != best_area)
    return area < best_area;
  if (std::abs(beta) != std::abs(best_beta))
    return std::abs(beta) < std::abs(best_beta);
  return beta < best_beta;
}

} // namespace

FeasibilityReport feasible(double beta, double area_s, const DesignConstraints& constraints,
                           const DesignOptions& options)
{
  constraints.validate();
  if (!std::isfinite(beta))
    throw DomainError("post-selection angle must be finite");
  if (!std::isfinite(area_s) || area_s <= 0.0)
    throw DomainError("loop area must be finite and positive");
  return BetaEvaluator(constraints, beta, options)(area_s);
}

DesignSolution min_area(const DesignConstraints& constraints, std::span<const double> beta_grid,
                        double area_lo, double area_hi, const DesignOptions& options)
{
  constraints.validate();
  if (beta_grid.empty())
    throw DomainError("empty post-selection grid");
  if (!std::isfinite(area_lo) || !std::isfinite(area_hi) || area_lo <= 0.0 || !(area_lo < area_hi))
    throw DomainError("area bracket must satisfy 0 < S_lo < S_hi");

  DesignSolution best;
  best.area_s_min = std::numeric_limits<double>::quiet_NaN();
  best.beta = beta_grid.front();
  for (const double beta : beta_grid) {
    if (!std::isfinite(beta))
      throw DomainError("post-selection grid contains a non-finite angle");
    BetaOutcome out = solve_beta(constraints, beta, area_lo, area_hi, options);
    best.warnings.insert(best.warnings.end(), out.warnings.begin(), out.warnings.end());
    if (!out.area)
      continue;
    if (!best.feasible || preferred(*out.area, beta, best.area_s_min, best.beta)) {
      best.feasible = true;
      best.beta = beta;
      best.area_s_min = *out.area;
      best.peak_intensity = out.report.peak_intensity;
      best.shift = out.report.shift;
      best.k_achieved = out.report.shift / constraints.omega_target;
    }
  }
  return best;
}

} // namespace wva
