#ifndef BARBELL_CLI_HPP
#define BARBELL_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "barbell/propagator.hpp"
#include "barbell/types.hpp"

namespace barbell {

struct RunConfig {
  std::string subcommand;

  int n = 1024;
  double w = 1.0;
  std::vector<double> weights;          // sweep only
  std::optional<double> gamma_flag;     // raw flag; gamma() applies the default
  WalkKind kind = WalkKind::Laplacian;
  double t_max = 0.0;                   // 0 -> 6*sqrt(N)
  int n_samples = 1201;
  std::string out = "barbell";          // output basename
  std::string format = "both";          // csv | svg | both
  std::optional<int> cap_flag;          // raw flag; cap() applies env/default

  Observable observable = Observable::MarkedVertex;
  double stage2_w = 1.0;
  std::optional<double> switch_time;    // two-stage override
  bool numeric_switch = false;          // switch at the detected clique peak
  int n_times = 50;                     // oracle-check samples
  int figure = 0;                       // figure subcommand
  std::string outdir = ".";

  double gamma() const;        // flag value or 2/N
  double resolved_t_max() const;
  int cap() const;             // flag > BARBELL_FULLSPACE_CAP env > 1024
};

/// Parses argv (without the program name) into a validated RunConfig.
/// Bad flags or flag values raise Error(UsageError) / the specific
/// parameter error.
RunConfig parse_cli(const std::vector<std::string>& args);

/// Parses and executes; returns the process exit code
/// (0 success, 1 usage error, 2 numeric or I/O failure).
int run_cli(const std::vector<std::string>& args);

}  // namespace barbell

#endif  // BARBELL_CLI_HPP
