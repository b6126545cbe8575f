#pragma once

/// Command-line front end. Subcommands:
///   qmt      BZ-averaged metric G for one parameter point
///   winding  winding number of a chiral model
///   gee      entanglement entropies at one (L, N, L_A)
///   scaling  entropies vs subsystem size L_A
///   sweep    G + entropies vs one swept parameter
///   check    built-in self-check suite (PASS/FAIL lines)
///
/// Real-valued flags accept a trailing "pi" literal (e.g. --k1 0.5pi)
/// so boundary values land exactly on multiples of pi.
/// Exit codes: 0 success, 1 usage error, 2 numerical error.

#include <string>
#include <vector>

#include "floq/sweep.hpp"

namespace floq {

enum class Subcommand { qmt, winding, gee, scaling, sweep, check };

enum class OutputFormat { csv, json };

struct RunConfig {
  Subcommand sub = Subcommand::check;
  FamilyParams params;
  int L = 0;
  int N = 0;
  int L_A = 0;
  int grid_size = 1 << 14;
  std::vector<double> renyi_lambdas;
  bool offset_grid = false;
  bool want_spectrum = false;  // gee, json output only
  FillingOrder order = FillingOrder::consecutive;
  // sweep only
  std::string swept_param;
  double sweep_start = 0.0;
  double sweep_stop = 0.0;
  double sweep_step = 0.0;
  // scaling only
  std::vector<int> L_A_values;
  std::string out_path;  // empty = stdout
  OutputFormat format = OutputFormat::csv;
};

/// "0.25", "0.5pi", "-pi", "2e-3" -> double. Throws UsageError naming
/// `flag` on malformed input.
double parse_real(const std::string& text, const std::string& flag);

/// args excludes the program name. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Dispatch a validated config. Returns 0, or 2 on numerical errors
/// (message on stderr). check returns 0 iff every line is PASS.
int run(const RunConfig& cfg);

/// parse + run + usage-error handling; the main() body.
int cli_main(int argc, char** argv);

}  // namespace floq
