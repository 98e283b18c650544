#include "wva/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "wva/errors.hpp"

namespace wva::io {

namespace {

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_csv_double(const std::string& token, std::size_t line)
{
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size())
    throw DomainError(fmt::format("line {}: invalid number '{}'", line, token));
  return v;
}

} // namespace

std::string format_number(double v)
{
  return fmt::format("{:.17g}", v);
}

void write_spectrum_csv(std::ostream& os, const SampledSpectrum& spec)
{
  os << "lambda_nm,intensity\n";
  for (std::size_t i = 0; i < spec.size(); ++i)
    os << format_number(spec.wavelengths[i]) << ',' << format_number(spec.intensities[i]) << '\n';
}

SampledSpectrum read_spectrum_csv(std::istream& is)
{
  std::string line;
  if (!std::getline(is, line) || trim(line) != "lambda_nm,intensity")
    throw DomainError("spectrum CSV must start with header 'lambda_nm,intensity'");
  SampledSpectrum spec;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty())
      continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw DomainError(fmt::format("line {}: expected two comma-separated fields", lineno));
    spec.wavelengths.push_back(parse_csv_double(line.substr(0, comma), lineno));
    spec.intensities.push_back(parse_csv_double(line.substr(comma + 1), lineno));
  }
  spec.validate();
  return spec;
}

Json spectrum_to_json(const SampledSpectrum& spec)
{
  return Json{{"form", std::string(to_string(spec.form))},
              {"lambda_nm", spec.wavelengths},
              {"intensity", spec.intensities}};
}

SampledSpectrum spectrum_from_json(const Json& j)
{
  SampledSpectrum spec;
  spec.form = spectrum_form_from_string(j.at("form").get<std::string>());
  spec.wavelengths = j.at("lambda_nm").get<std::vector<double>>();
  spec.intensities = j.at("intensity").get<std::vector<double>>();
  spec.validate();
  return spec;
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep)
{
  os << "omega,phi,im_aw,dlambda_analytic_nm,dlambda_fitted_nm,postselect_prob\n";
  for (const SweepRow& r : sweep.rows) {
    os << format_number(r.omega) << ',' << format_number(r.phi) << ',' << format_number(r.im_aw) << ','
       << format_number(r.dlambda_analytic) << ',' << format_number(r.dlambda_fitted) << ','
       << format_number(r.postselect_prob) << '\n';
  }
}

Json sweep_to_json(const SweepResult& sweep)
{
  Json rows = Json::array();
  for (const SweepRow& r : sweep.rows) {
    Json row{{"omega", r.omega},
             {"phi", r.phi},
             {"im_aw", r.im_aw},
             {"dlambda_analytic_nm", r.dlambda_analytic},
             {"dlambda_fitted_nm", r.dlambda_fitted},
             {"postselect_prob", r.postselect_prob}};
    if (!r.ok())
      row["flag"] = r.flag;
    rows.push_back(std::move(row));
  }
  const ModelSpec& m = sweep.model;
  return Json{{"name", m.name},
              {"form", std::string(to_string(sweep.form))},
              {"area_S", m.area_s},
              {"alpha", m.alpha},
              {"beta", m.beta},
              {"lambda0_nm", m.probe.lambda0},
              {"dlambda_nm", m.probe.width},
              {"i0", m.probe.i0},
              {"envelope", std::string(to_string(m.probe.envelope))},
              {"window", {sweep.window.lo, sweep.window.hi}},
              {"k_analytic", sweep.k_analytic},
              {"k_fitted", sweep.k_fitted},
              {"degenerate_zero_shift", sweep.degenerate_zero_shift},
              {"warnings", sweep.warnings},
              {"rows", std::move(rows)}};
}

std::vector<SweepRow> sweep_rows_from_json(const Json& j)
{
  auto num = [](const Json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
  };
  std::vector<SweepRow> rows;
  for (const Json& r : j.at("rows")) {
    SweepRow row;
    row.omega = num(r.at("omega"));
    row.phi = num(r.at("phi"));
    row.im_aw = num(r.at("im_aw"));
    row.dlambda_analytic = num(r.at("dlambda_analytic_nm"));
    row.dlambda_fitted = num(r.at("dlambda_fitted_nm"));
    row.postselect_prob = num(r.at("postselect_prob"));
    if (r.contains("flag"))
      row.flag = r.at("flag").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

Json design_to_json(const DesignSolution& sol, const DesignConstraints& c)
{
  return Json{{"feasible", sol.feasible},
              {"beta", sol.beta},
              {"area_S_min", sol.area_s_min},
              {"k_achieved", sol.k_achieved},
              {"peak_intensity", sol.peak_intensity},
              {"shift_nm", sol.shift},
              {"warnings", sol.warnings},
              {"constraints",
               {{"alpha", c.alpha},
                {"i0", c.i0()},
                {"i_min", c.i_min},
                {"delta_lambda_res_nm", c.delta_lambda_res},
                {"omega_target", c.omega_target},
                {"lambda0_nm", c.probe.lambda0},
                {"dlambda_nm", c.probe.width}}}};
}

Json geometry_to_json(const MultipassDesign& d)
{
  return Json{{"theta_deg", d.theta_deg},
              {"n_turns", d.n_turns},
              {"area_equiv_m2", d.area_equiv},
              {"ratio_vs_square", d.ratio_vs_square}};
}

Json classical_to_json(const ClassicalReading& r)
{
  return Json{{"omega", r.omega},
              {"fringe_shift", r.fringe_shift},
              {"sagnac_phase", r.sagnac_phase},
              {"intensity", r.intensity}};
}

std::map<std::string, std::string> parse_config(std::istream& is, const std::string& origin)
{
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(fmt::format("{}:{}: expected 'key = value', got '{}'", origin, lineno, line));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error(fmt::format("{}:{}: empty key or value", origin, lineno));
    out[std::move(key)] = std::move(value);
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

} // namespace wva::io
