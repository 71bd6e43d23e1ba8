#pragma once

// Batch front end. Every command reads a sequence CSV, calls the library,
// and writes a JSON summary plus CSV series into the output directory.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pathnoise::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kNumerical = 3,
  kAmbiguous = 4,
};

struct RunConfig {
  std::string command;  ///< analyze | decompose2 | recover | project | estimate-band | predict | multistep
  std::filesystem::path input;
  std::filesystem::path out = ".";
  std::size_t grid = 4096;
  std::optional<std::vector<double>> band;  ///< center, half_width
  int coeffs = 32;
  std::size_t horizon_T = 4096;
  double reg = 0.0;
  double eps = 0.0;
  double nu = 3.141592653589793;
  std::size_t taps = 32;
  std::size_t horizon = 0;
  std::size_t max_steps = 16;
  double stop_tol = 1e-6;
  double decrease_tol = 1e-4;
  std::optional<std::int64_t> tau_split;
  std::size_t window = 256;
  std::optional<std::int64_t> m;
  std::optional<double> omega0;
  std::optional<double> sigma;
  int threads = 0;
};

const std::vector<std::string>& commands();

/// Parses argv (flags, then an optional --config JSON whose values lose to flags).
/// Throws pathnoise::ValidationError on bad usage; returns nullopt for --help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Runs one command; errors become exit codes plus a one-line stderr record.
int run(const RunConfig& cfg, std::ostream& err);

}  // namespace pathnoise::cli
