#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "wva/errors.hpp"
#include "wva/spectrum.hpp"

namespace wva::cli {

enum class Command
{
  simulate,
  sweep,
  design,
  geometry,
  classical,
};

enum class OutputFormat
{
  csv,
  json,
};

std::string_view to_string(Command c);

/// Bad command line or config file. Exit status 2.
class UsageError : public Error
{
public:
  using Error::Error;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int domain = 3;
inline constexpr int fit_failure = 4;
inline constexpr int infeasible = 5;
} // namespace exit_code

struct RunConfig
{
  Command command = Command::simulate;
  // Keys are flag names without the leading dashes, e.g. "omega-min".
  std::map<std::string, std::string> parameters;
  std::string output_path = "-"; // "-" is standard output
  OutputFormat format = OutputFormat::csv;
  SpectrumForm form = SpectrumForm::exact;

  double number(const std::string& key) const;
  std::optional<double> optional_number(const std::string& key) const;
  bool has(const std::string& key) const { return parameters.count(key) != 0; }
};

/*!
 * Parse `<command> [--key value ...]` (program name excluded).
 *
 * Values come from flags, then the `--config` file, then built-in defaults.
 * Physics inputs (alpha, beta, area, lambda0, dlambda, ...) have no defaults.
 * Throws UsageError naming the offending token.
 */
RunConfig parse_args(std::span<const std::string> args);

/// Run a parsed command, writing its artifact to cfg.output_path (or `out`
/// when that is "-"). Returns the process exit status.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + execute with errors mapped to exit statuses.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace wva::cli
