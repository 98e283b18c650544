#include "wva/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "wva/classical.hpp"
#include "wva/design.hpp"
#include "wva/fit.hpp"
#include "wva/geometry.hpp"
#include "wva/io.hpp"
#include "wva/sweep.hpp"

namespace wva::cli {

namespace {

enum class Kind
{
  required,
  defaulted,
  optional,
};

enum class ValueType
{
  number,
  integer,
  text,
};

struct KeySpec
{
  const char* name;
  Kind kind;
  const char* fallback;
  ValueType type;
  const char* help;
};

constexpr Kind R = Kind::required;
constexpr Kind D = Kind::defaulted;
constexpr Kind O = Kind::optional;
constexpr ValueType NUM = ValueType::number;
constexpr ValueType INT = ValueType::integer;
constexpr ValueType TXT = ValueType::text;

const std::vector<KeySpec> kSimulateKeys = {
  {"alpha", R, nullptr, NUM, "pre-selection angle, rad"},
  {"beta", R, nullptr, NUM, "post-selection angle, rad"},
  {"area", R, nullptr, NUM, "loop area S, m^2"},
  {"lambda0", R, nullptr, NUM, "probe center wavelength, nm"},
  {"dlambda", R, nullptr, NUM, "probe width W, nm"},
  {"omega", D, "0", NUM, "rotation rate, rad/s"},
  {"i0", D, "1", NUM, "probe peak intensity"},
  {"points", D, "2048", INT, "wavelength grid size"},
  {"envelope", D, "std_dev", TXT, "probe intensity envelope: std_dev|squared"},
};

const std::vector<KeySpec> kSweepKeys = {
  {"model", O, nullptr, TXT, "table preset model1..model4 (fills area, alpha, beta)"},
  {"name", O, nullptr, TXT, "label written to the JSON report"},
  {"alpha", R, nullptr, NUM, "pre-selection angle, rad"},
  {"beta", R, nullptr, NUM, "post-selection angle, rad"},
  {"area", R, nullptr, NUM, "loop area S, m^2"},
  {"lambda0", R, nullptr, NUM, "probe center wavelength, nm"},
  {"dlambda", R, nullptr, NUM, "probe width W, nm"},
  {"omega-min", D, "-0.1", NUM, "sweep start, rad/s"},
  {"omega-max", D, "0.1", NUM, "sweep end, rad/s"},
  {"steps", D, "201", INT, "number of sweep rows"},
  {"i0", D, "1", NUM, "probe peak intensity"},
  {"points", D, "2048", INT, "wavelength grid size"},
  {"envelope", D, "std_dev", TXT, "probe intensity envelope: std_dev|squared"},
  {"window-lo", O, nullptr, NUM, "sensitivity window start, rad/s"},
  {"window-hi", O, nullptr, NUM, "sensitivity window end, rad/s"},
};

const std::vector<KeySpec> kDesignKeys = {
  {"alpha", R, nullptr, NUM, "pre-selection angle, rad"},
  {"lambda0", R, nullptr, NUM, "probe center wavelength, nm"},
  {"dlambda", R, nullptr, NUM, "probe width W, nm"},
  {"i0", D, "1", NUM, "source peak intensity"},
  {"i-min", R, nullptr, NUM, "spectrometer detection floor"},
  {"dlambda-res", R, nullptr, NUM, "smallest resolvable shift, nm"},
  {"omega-target", R, nullptr, NUM, "rotation rate to resolve, rad/s"},
  {"beta-min", R, nullptr, NUM, "post-selection grid start, rad"},
  {"beta-max", R, nullptr, NUM, "post-selection grid end, rad"},
  {"beta-steps", D, "41", INT, "post-selection grid size"},
  {"area-lo", R, nullptr, NUM, "smallest admissible area, m^2"},
  {"area-hi", R, nullptr, NUM, "largest admissible area, m^2"},
  {"points", D, "2048", INT, "wavelength grid size"},
  {"envelope", D, "std_dev", TXT, "probe intensity envelope: std_dev|squared"},
};

const std::vector<KeySpec> kGeometryKeys = {
  {"theta-deg", R, nullptr, NUM, "injection angle, integer degrees"},
  {"rs", R, nullptr, NUM, "device radius R_s, m"},
};

const std::vector<KeySpec> kClassicalKeys = {
  {"area", R, nullptr, NUM, "loop area S, m^2"},
  {"lambda0", R, nullptr, NUM, "center wavelength, nm"},
  {"omega", R, nullptr, NUM, "rotation rate, rad/s"},
  {"amplitude", D, "1", NUM, "intensity amplitude A"},
  {"mod-phase", D, "0", NUM, "modulation phase, rad"},
};

const std::vector<KeySpec>& keys_for(Command c)
{
  switch (c) {
  case Command::simulate:
    return kSimulateKeys;
  case Command::sweep:
    return kSweepKeys;
  case Command::design:
    return kDesignKeys;
  case Command::geometry:
    return kGeometryKeys;
  case Command::classical:
    break;
  }
  return kClassicalKeys;
}

constexpr Command kCommands[] = {Command::simulate, Command::sweep, Command::design, Command::geometry,
                                 Command::classical};

std::optional<double> parse_double(std::string_view text)
{
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    return std::nullopt;
  return v;
}

void check_value(const KeySpec& key, const std::string& value)
{
  if (key.type == ValueType::text)
    return;
  const auto v = parse_double(value);
  if (!v)
    throw UsageError(fmt::format("--{}: '{}' is not a finite number", key.name, value));
  if (key.type == ValueType::integer && *v != std::floor(*v))
    throw UsageError(fmt::format("--{}: '{}' is not an integer", key.name, value));
}

struct HelpRequested
{
  std::string text;
};

std::string render_json(const io::Json& j)
{
  return j.dump(2) + "\n";
}

void emit(const RunConfig& cfg, const std::string& artifact, std::ostream& out)
{
  if (cfg.output_path == "-") {
    out << artifact;
    out.flush();
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file)
    throw UsageError("cannot open output file '" + cfg.output_path + "'");
  file << artifact;
}

int to_int(double v)
{
  return static_cast<int>(v);
}

SpectrumModel probe_from(const RunConfig& cfg)
{
  SpectrumModel probe{cfg.number("i0"), cfg.number("lambda0"), cfg.number("dlambda"),
                      probe_envelope_from_string(cfg.parameters.at("envelope"))};
  probe.validate();
  return probe;
}

int run_simulate(const RunConfig& cfg, std::ostream& out)
{
  const SpectrumModel probe = probe_from(cfg);
  const auto interferometer = InterferometerConfig::from_nm(cfg.number("area"), probe.lambda0);
  const double phi = sagnac_phase(interferometer, cfg.number("omega"));
  const auto wv = weak_value({cfg.number("alpha"), cfg.number("beta"), phi});
  const auto grid = default_grid(probe, static_cast<std::size_t>(std::max(0, to_int(cfg.number("points")))));
  const auto spec = output_spectrum(probe, wv, probe.coupling(), grid, cfg.form);

  if (cfg.format == OutputFormat::csv) {
    std::ostringstream os;
    io::write_spectrum_csv(os, spec);
    emit(cfg, os.str(), out);
    return exit_code::ok;
  }
  const FitResult fit = fit_center(spec, probe.width);
  io::Json j = io::spectrum_to_json(spec);
  j["omega"] = cfg.number("omega");
  j["phi"] = phi;
  j["weak_value"] = {{"re", wv.a_w.real()}, {"im", wv.a_w.imag()}};
  j["postselect_prob"] = wv.postselect_probability();
  j["dlambda_analytic_nm"] = analytic_wavelength_shift(probe, wv.a_w);
  j["fit"] = {{"center", fit.center},
              {"width", fit.width},
              {"peak", fit.peak},
              {"residual_norm", fit.residual_norm},
              {"iterations", fit.iterations}};
  emit(cfg, render_json(j), out);
  return exit_code::ok;
}

int run_sweep_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  ModelSpec model;
  model.name = cfg.has("name") ? cfg.parameters.at("name")
                               : (cfg.has("model") ? cfg.parameters.at("model") : "custom");
  model.area_s = cfg.number("area");
  model.alpha = cfg.number("alpha");
  model.beta = cfg.number("beta");
  model.probe = probe_from(cfg);
  model.omega_min = cfg.number("omega-min");
  model.omega_max = cfg.number("omega-max");
  model.steps = to_int(cfg.number("steps"));

  SweepOptions options;
  options.grid_points = static_cast<std::size_t>(std::max(0, to_int(cfg.number("points"))));
  const auto wlo = cfg.optional_number("window-lo");
  const auto whi = cfg.optional_number("window-hi");
  if (wlo.has_value() != whi.has_value())
    throw UsageError("--window-lo and --window-hi must be given together");
  if (wlo)
    options.window = OmegaWindow{*wlo, *whi};

  const SweepResult result = run_sweep(model, cfg.form, options);
  for (const auto& w : result.warnings)
    err << "warning: " << w << '\n';

  if (cfg.format == OutputFormat::csv) {
    std::ostringstream os;
    io::write_sweep_csv(os, result);
    emit(cfg, os.str(), out);
  } else {
    emit(cfg, render_json(io::sweep_to_json(result)), out);
  }
  return exit_code::ok;
}

int run_design(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  DesignConstraints c;
  c.probe = probe_from(cfg);
  c.i_min = cfg.number("i-min");
  c.delta_lambda_res = cfg.number("dlambda-res");
  c.omega_target = cfg.number("omega-target");
  c.alpha = cfg.number("alpha");

  const double bmin = cfg.number("beta-min");
  const double bmax = cfg.number("beta-max");
  const int steps = to_int(cfg.number("beta-steps"));
  if (steps < 1)
    throw DomainError("beta-steps must be at least 1");
  std::vector<double> betas(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    betas[static_cast<std::size_t>(i)] =
      steps == 1 ? bmin : bmin + (bmax - bmin) * static_cast<double>(i) / static_cast<double>(steps - 1);

  DesignOptions options;
  options.grid_points = static_cast<std::size_t>(std::max(0, to_int(cfg.number("points"))));
  const DesignSolution sol = min_area(c, betas, cfg.number("area-lo"), cfg.number("area-hi"), options);
  for (const auto& w : sol.warnings)
    err << "warning: " << w << '\n';

  if (cfg.format == OutputFormat::csv) {
    std::ostringstream os;
    os << "feasible,beta,area_S_min,k_achieved,peak_intensity,shift_nm\n"
       << (sol.feasible ? 1 : 0) << ',' << io::format_number(sol.beta) << ','
       << io::format_number(sol.area_s_min) << ',' << io::format_number(sol.k_achieved) << ','
       << io::format_number(sol.peak_intensity) << ',' << io::format_number(sol.shift) << '\n';
    emit(cfg, os.str(), out);
  } else {
    emit(cfg, render_json(io::design_to_json(sol, c)), out);
  }
  return sol.feasible ? exit_code::ok : exit_code::infeasible;
}

int run_geometry(const RunConfig& cfg, std::ostream& out)
{
  const int theta = checked_theta_deg(cfg.number("theta-deg"));
  const MultipassDesign d = multipass_design(theta, cfg.number("rs"));
  if (cfg.format == OutputFormat::csv) {
    emit(cfg,
         fmt::format("theta_deg,n_turns,area_equiv_m2,ratio_vs_square\n{},{},{},{}\n", d.theta_deg, d.n_turns,
                     io::format_number(d.area_equiv), io::format_number(d.ratio_vs_square)),
         out);
  } else {
    emit(cfg, render_json(io::geometry_to_json(d)), out);
  }
  return exit_code::ok;
}

int run_classical(const RunConfig& cfg, std::ostream& out)
{
  const auto interferometer =
    InterferometerConfig::from_nm(cfg.number("area"), cfg.number("lambda0"), cfg.number("mod-phase"));
  io::ClassicalReading r;
  r.omega = cfg.number("omega");
  r.fringe_shift = fringe_shift(interferometer, r.omega);
  r.sagnac_phase = sagnac_phase(interferometer, r.omega);
  r.intensity = classical_intensity(interferometer, cfg.number("amplitude"), r.omega);
  if (cfg.format == OutputFormat::csv) {
    emit(cfg,
         fmt::format("omega,fringe_shift,sagnac_phase,intensity\n{},{},{},{}\n", io::format_number(r.omega),
                     io::format_number(r.fringe_shift), io::format_number(r.sagnac_phase),
                     io::format_number(r.intensity)),
         out);
  } else {
    emit(cfg, render_json(io::classical_to_json(r)), out);
  }
  return exit_code::ok;
}

std::string summary(Command c)
{
  switch (c) {
  case Command::simulate:
    return "post-selected output spectrum at one rotation rate";
  case Command::sweep:
    return "shift versus rotation rate, analytic and fitted, with sensitivity";
  case Command::design:
    return "smallest loop area meeting floor and resolution constraints";
  case Command::geometry:
    return "multipass loop turns and equivalent area";
  case Command::classical:
    break;
  }
  return "plain Sagnac fringe shift and intensity";
}

std::optional<std::array<double, 3>> model_preset(const std::string& name)
{
  // area, alpha, beta
  if (name == "model1")
    return std::array{16.0, 0.1, -0.5};
  if (name == "model2")
    return std::array{16.0, 0.1, -0.3};
  if (name == "model3")
    return std::array{16.0, 0.1, -0.1};
  if (name == "model4")
    return std::array{3.0, 0.1, -0.1};
  return std::nullopt;
}

} // namespace

std::string_view to_string(Command c)
{
  switch (c) {
  case Command::simulate:
    return "simulate";
  case Command::sweep:
    return "sweep";
  case Command::design:
    return "design";
  case Command::geometry:
    return "geometry";
  case Command::classical:
    break;
  }
  return "classical";
}

double RunConfig::number(const std::string& key) const
{
  const auto it = parameters.find(key);
  if (it == parameters.end())
    throw UsageError("missing required parameter --" + key);
  const auto v = parse_double(it->second);
  if (!v)
    throw UsageError(fmt::format("--{}: '{}' is not a finite number", key, it->second));
  return *v;
}

std::optional<double> RunConfig::optional_number(const std::string& key) const
{
  if (!has(key))
    return std::nullopt;
  return number(key);
}

RunConfig parse_args(std::span<const std::string> args)
{
  CLI::App app{"Weak-value amplified Sagnac rotation sensing: spectra, sweeps, design and geometry",
               "wvasim"};
  app.require_subcommand(1, 1);

  struct Slot
  {
    Command command;
    CLI::App* app;
    std::map<std::string, std::string> values;
    std::string config, out, format, form;
  };
  std::vector<Slot> slots;
  slots.reserve(std::size(kCommands));

  for (Command c : kCommands) {
    slots.push_back({c, nullptr, {}, {}, {}, {}, {}});
    Slot& s = slots.back();
    s.app = app.add_subcommand(std::string(to_string(c)), summary(c));
    for (const KeySpec& k : keys_for(c))
      s.app->add_option("--" + std::string(k.name), s.values[k.name], k.help);
    s.app->add_option("--config", s.config, "flat key = value file");
    s.app->add_option("--out", s.out, "output path, '-' for stdout");
    s.app->add_option("--format", s.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    s.app->add_option("--form", s.form, "paper|exact")->check(CLI::IsMember({"paper", "exact"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = nullptr;
    for (const Slot& s : slots)
      if (s.app->parsed())
        sub = s.app;
    throw HelpRequested{sub ? sub->help() : app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto chosen = std::find_if(slots.begin(), slots.end(), [](const Slot& s) { return s.app->parsed(); });
  const Slot& s = *chosen;

  RunConfig cfg;
  cfg.command = s.command;

  std::map<std::string, std::string> file;
  if (!s.config.empty()) {
    try {
      file = io::read_config_file(s.config);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }

  const auto& keys = keys_for(s.command);
  for (const auto& [key, value] : file) {
    const bool known = key == "out" || key == "format" || key == "form" ||
                       std::any_of(keys.begin(), keys.end(), [&](const KeySpec& k) { return key == k.name; });
    if (!known)
      throw UsageError(fmt::format("{}: unknown key '{}' for command '{}'", s.config, key, to_string(s.command)));
  }

  auto flag_given = [&](const std::string& name) { return s.app->get_option("--" + name)->count() > 0; };
  auto global = [&](const std::string& name, const std::string& flag_value) -> std::optional<std::string> {
    if (flag_given(name))
      return flag_value;
    if (auto it = file.find(name); it != file.end())
      return it->second;
    return std::nullopt;
  };

  // Preset values sit between config file and built-in defaults.
  std::map<std::string, std::string> preset;
  if (s.command == Command::sweep) {
    std::optional<std::string> model = flag_given("model") ? std::optional(s.values.at("model")) : std::nullopt;
    if (!model && file.count("model"))
      model = file.at("model");
    if (model) {
      const auto p = model_preset(*model);
      if (!p)
        throw UsageError(fmt::format("--model: unknown model '{}'", *model));
      preset["area"] = io::format_number((*p)[0]);
      preset["alpha"] = io::format_number((*p)[1]);
      preset["beta"] = io::format_number((*p)[2]);
    }
  }

  for (const KeySpec& k : keys) {
    std::optional<std::string> value;
    if (flag_given(k.name))
      value = s.values.at(k.name);
    else if (auto it = file.find(k.name); it != file.end())
      value = it->second;
    else if (auto pit = preset.find(k.name); pit != preset.end())
      value = pit->second;
    else if (k.kind == Kind::defaulted)
      value = k.fallback;

    if (!value) {
      if (k.kind == Kind::required)
        throw UsageError(fmt::format("{}: missing required parameter --{}", to_string(s.command), k.name));
      continue;
    }
    check_value(k, *value);
    cfg.parameters[k.name] = *value;
  }

  if (cfg.has("envelope")) {
    const auto& env = cfg.parameters.at("envelope");
    if (env != "std_dev" && env != "squared")
      throw UsageError(fmt::format("--envelope: '{}' is not one of std_dev|squared", env));
  }

  if (auto out = global("out", s.out))
    cfg.output_path = *out;
  const bool tabular = s.command == Command::simulate || s.command == Command::sweep;
  cfg.format = tabular ? OutputFormat::csv : OutputFormat::json;
  if (auto fmt_value = global("format", s.format)) {
    if (*fmt_value != "csv" && *fmt_value != "json")
      throw UsageError(fmt::format("--format: '{}' is not one of csv|json", *fmt_value));
    cfg.format = *fmt_value == "csv" ? OutputFormat::csv : OutputFormat::json;
  }
  if (auto form = global("form", s.form)) {
    if (*form != "paper" && *form != "exact")
      throw UsageError(fmt::format("--form: '{}' is not one of paper|exact", *form));
    cfg.form = spectrum_form_from_string(*form);
  }
  return cfg;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  switch (cfg.command) {
  case Command::simulate:
    return run_simulate(cfg, out);
  case Command::sweep:
    return run_sweep_command(cfg, out, err);
  case Command::design:
    return run_design(cfg, out, err);
  case Command::geometry:
    return run_geometry(cfg, out);
  case Command::classical:
    break;
  }
  return run_classical(cfg, out);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
  try {
    return execute(parse_args(args), out, err);
  } catch (const HelpRequested& h) {
    out << h.text;
    return exit_code::ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'wvasim --help' for usage\n";
    return exit_code::usage;
  } catch (const FitError& e) {
    err << "fit failure: " << e.what() << " (last residual " << e.last_residual() << ")\n";
    return exit_code::fit_failure;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::domain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace wva::cli
