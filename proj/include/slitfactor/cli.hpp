#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "slitfactor/analytic.hpp"
#include "slitfactor/fresnel.hpp"
#include "slitfactor/kernels.hpp"

namespace slitfactor {

enum class Command { pattern, scan, sweep, factor, calibrate };

/// Exit statuses of run().
enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitInconsistent = 4,
};

/// One CLI invocation. Unset optionals take the per-command defaults.
struct RunConfig {
  Command command = Command::factor;
  std::int64_t slit_count = 0;
  std::int64_t order = 0;
  SpikeModel model = SpikeModel::delta;
  std::optional<double> fill;
  Window window{};
  int samples_per_period = 201;
  std::optional<double> threshold;
  double detune_max = 1e-3;
  std::optional<int> steps;
  unsigned threads = 0;
  std::string output;  // empty: standard output
  bool json = false;
  std::optional<kernels::Backend> backend;
};

/// Throws InvalidInput describing the first violated precondition.
void validate(const RunConfig& config);

/// Runs a validated command, writing data to config.output (or out) and
/// diagnostics to err. Returns an ExitStatus.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with the subcommands pattern, scan, sweep, factor, calibrate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slitfactor
