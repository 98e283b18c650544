#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "wva/classical.hpp"
#include "wva/design.hpp"
#include "wva/geometry.hpp"
#include "wva/spectrum.hpp"
#include "wva/sweep.hpp"

namespace wva::io {

using Json = nlohmann::json;

// 17 significant digits, '.' decimal; round-trips any double.
std::string format_number(double v);

// lambda_nm,intensity
void write_spectrum_csv(std::ostream& os, const SampledSpectrum& spec);
SampledSpectrum read_spectrum_csv(std::istream& is);

// {form, lambda_nm: [...], intensity: [...]}
Json spectrum_to_json(const SampledSpectrum& spec);
SampledSpectrum spectrum_from_json(const Json& j);

// omega,phi,im_aw,dlambda_analytic_nm,dlambda_fitted_nm,postselect_prob
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);
Json sweep_to_json(const SweepResult& sweep);
std::vector<SweepRow> sweep_rows_from_json(const Json& j);

Json design_to_json(const DesignSolution& sol, const DesignConstraints& c);
Json geometry_to_json(const MultipassDesign& d);

struct ClassicalReading
{
  double omega = 0.0;
  double fringe_shift = 0.0;
  double sagnac_phase = 0.0;
  double intensity = 0.0;
};
Json classical_to_json(const ClassicalReading& r);

/// Flat `key = value` file, one entry per line, `#` starts a comment.
/// Throws std::runtime_error naming the line on malformed input.
std::map<std::string, std::string> parse_config(std::istream& is, const std::string& origin = "config");
std::map<std::string, std::string> read_config_file(const std::string& path);

} // namespace wva::io
