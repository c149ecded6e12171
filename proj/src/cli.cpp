#include "slitfactor/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slitfactor/error.hpp"
#include "slitfactor/grating.hpp"
#include "slitfactor/io.hpp"
#include "slitfactor/scan.hpp"

namespace slitfactor {
namespace {

constexpr double kDefaultSweepFillMax = 0.15;
constexpr int kDefaultSweepSteps = 30;
constexpr double kDefaultCalibrateFill = 1e-3;
constexpr int kDefaultCalibrateSteps = 101;

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

void require_odd_at_least(std::int64_t v, std::int64_t min, const char* flag) {
  require(v >= min && is_odd(v), std::string(flag) + " must be an odd integer >= " +
                                     std::to_string(min) + ", got " + std::to_string(v));
}

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, "--window expects lo:hi, got '" + text + "'");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    Window w{std::stod(lo, &used_lo), std::stod(hi, &used_hi)};
    require(used_lo == lo.size() && used_hi == hi.size(), "--window expects lo:hi");
    return w;
  } catch (const std::logic_error&) {
    throw InvalidInput("--window expects numeric lo:hi, got '" + text + "'");
  }
}

double fill_or(const RunConfig& c, double fallback) { return c.fill.value_or(fallback); }

ScanModel scan_model(const RunConfig& c) {
  return {c.model, c.model == SpikeModel::delta ? 0.0 : fill_or(c, 0.0)};
}

std::string execute(const RunConfig& c, std::ostream& err, int& status) {
  status = kExitOk;
  switch (c.command) {
    case Command::pattern: {
      const auto samples = pattern_samples(c.slit_count, c.order, 0.0, fill_or(c, 0.0), c.window,
                                           c.samples_per_period, c.threads);
      return to_csv(pattern_table(samples));
    }
    case Command::scan:
      return to_csv(scan_table(scan(c.slit_count, scan_model(c), c.threads)));
    case Command::sweep:
      return to_csv(sweep_table(slit_width_sweep(c.slit_count, c.order,
                                                 fill_or(c, kDefaultSweepFillMax),
                                                 c.steps.value_or(kDefaultSweepSteps),
                                                 c.threads)));
    case Command::calibrate:
      return to_csv(detuning_table(detuning_curve(c.slit_count, c.order,
                                                  fill_or(c, kDefaultCalibrateFill),
                                                  c.detune_max,
                                                  c.steps.value_or(kDefaultCalibrateSteps),
                                                  c.threads)));
    case Command::factor: {
      const ScanModel model = scan_model(c);
      const double threshold = c.threshold.value_or(default_threshold(model.model));
      const FactorReport report =
          factorize(static_cast<std::uint64_t>(c.slit_count), threshold, model, c.threads);
      if (!report.oracle_agrees) {
        err << "error: detected factors disagree with trial division\n";
        status = kExitInconsistent;
      }
      if (c.json) {
        std::ostringstream os;
        emit_factor_report(os, report);
        return os.str();
      }
      std::ostringstream os;
      os << report.input << " =";
      for (std::size_t i = 0; i < report.divisors.size(); ++i) {
        os << (i ? " x " : " ") << report.divisors[i];
      }
      if (report.divisors.empty()) os << " 1";
      os << "\noracle_agrees: " << (report.oracle_agrees ? "true" : "false") << '\n';
      return os.str();
    }
  }
  throw InvalidInput("unknown command");
}

}  // namespace

void validate(const RunConfig& c) {
  require(c.threads <= 1024, "--threads must be at most 1024");
  if (c.fill) require(std::isfinite(*c.fill) && *c.fill >= 0.0 && *c.fill < 1.0,
                      "--fill must lie in [0, 1)");
  if (c.threshold) require(std::isfinite(*c.threshold) && *c.threshold > 0.0,
                           "--threshold must be positive");
  require(c.model == SpikeModel::delta || c.model == SpikeModel::fresnel,
          "--model must be delta or fresnel");
  switch (c.command) {
    case Command::pattern:
      require_odd_at_least(c.slit_count, 1, "--N");
      require_odd_at_least(c.order, 1, "--n");
      require(c.window.lo < c.window.hi, "--window needs lo < hi");
      require(c.samples_per_period >= 2, "--spp must be >= 2");
      break;
    case Command::scan:
      require_odd_at_least(c.slit_count, 3, "--N");
      if (c.model == SpikeModel::fresnel) {
        require(fill_or(c, 0.0) > 0.0, "--model fresnel needs --fill > 0");
      }
      break;
    case Command::sweep: {
      require_odd_at_least(c.slit_count, 3, "--N");
      require_odd_at_least(c.order, 1, "--n");
      require(c.slit_count % c.order == 0, "sweep needs --n to divide --N");
      const double fmax = fill_or(c, kDefaultSweepFillMax);
      require(fmax > 0.0 && fmax <= 0.5, "sweep --fill (maximum fill) must lie in (0, 0.5]");
      require(c.steps.value_or(kDefaultSweepSteps) >= 2, "sweep --steps must be >= 2");
      break;
    }
    case Command::factor:
      require(c.slit_count >= 1, "--N must be a positive integer");
      if (c.model == SpikeModel::fresnel) {
        const auto core = static_cast<std::int64_t>(
            reduce_even(static_cast<std::uint64_t>(c.slit_count)).odd_core);
        const double f = fill_or(c, 0.0);
        require(core < 3 || (f > 0.0 && f <= max_detection_fill(core)),
                "factor --model fresnel needs 0 < --fill <= min(1/(50 N), 1e-3)");
      }
      break;
    case Command::calibrate: {
      require_odd_at_least(c.slit_count, 3, "--N");
      require_odd_at_least(c.order, 1, "--n");
      require(std::isfinite(c.detune_max) && c.detune_max > 0.0 && c.detune_max < 1.0,
              "--detune-max must lie in (0, 1)");
      const int steps = c.steps.value_or(kDefaultCalibrateSteps);
      require(steps >= 3 && steps % 2 == 1, "calibrate --steps must be odd and >= 3");
      break;
    }
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (config.backend) kernels::select_backend(*config.backend);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // Open the destination before computing so an unwritable path fails fast.
  std::ofstream file;
  if (!config.output.empty()) {
    file.open(config.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output file '" << config.output << "'\n";
      return kExitIo;
    }
  }
  std::ostream& sink = config.output.empty() ? out : file;

  int status = kExitOk;
  try {
    const std::string content = execute(config, err, status);
    sink << content;
    sink.flush();
    if (!sink) {
      err << "error: failed writing output\n";
      return kExitIo;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "error: internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return status;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factor odd integers with a simulated N-slit interferometer"};
  app.require_subcommand(1);

  RunConfig config;
  std::string window_text = "-8:8";
  std::string backend_text = "auto";
  std::string output;
  std::string model_text = "delta";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--N", config.slit_count, "Slit count / integer to factor")->required();
    sub->add_option("--model", model_text, "delta | fresnel")
        ->check(CLI::IsMember({"delta", "fresnel"}));
    sub->add_option("--fill", config.fill, "Slit width over period s/a (sweep: maximum s/a)");
    sub->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
    sub->add_option("--out", output, "Output file (default: standard output)");
    sub->add_option("--kernel", backend_text, "Kernel backend: auto | scalar | avx2");
  };

  auto* pattern = app.add_subcommand("pattern", "Sample the screen intensity (CSV chi,intensity)");
  add_common(pattern);
  pattern->add_option("--n", config.order, "Resonance order")->required();
  pattern->add_option("--window", window_text, "Screen window lo:hi in periods");
  pattern->add_option("--spp", config.samples_per_period, "Samples per period");

  auto* scan_cmd = app.add_subcommand("scan", "RMS spike variation over odd n (CSV n,sigma)");
  add_common(scan_cmd);

  auto* sweep = app.add_subcommand("sweep", "Slit-width sweep of sigma_s (CSV fill,rescaled,sigma_s)");
  add_common(sweep);
  sweep->add_option("--n", config.order, "Divisor order n")->required();
  sweep->add_option("--steps", config.steps, "Grid points above fill = 0");

  auto* factor = app.add_subcommand("factor", "Factor an integer");
  add_common(factor);
  factor->add_option("--threshold", config.threshold, "Detection threshold on sigma");
  factor->add_flag("--json", config.json, "Emit the JSON factor report");

  auto* calibrate = app.add_subcommand("calibrate", "Mean spike intensity versus detuning");
  add_common(calibrate);
  calibrate->add_option("--n", config.order, "Resonance order")->required();
  calibrate->add_option("--detune-max", config.detune_max, "Largest relative detuning");
  calibrate->add_option("--steps", config.steps, "Odd number of detuning samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (*pattern) config.command = Command::pattern;
  if (*scan_cmd) config.command = Command::scan;
  if (*sweep) config.command = Command::sweep;
  if (*factor) config.command = Command::factor;
  if (*calibrate) config.command = Command::calibrate;
  config.output = output;
  config.model = model_text == "fresnel" ? SpikeModel::fresnel : SpikeModel::delta;

  try {
    if (*pattern) config.window = parse_window(window_text);
    if (backend_text != "auto") {
      const auto backend = kernels::parse_backend(backend_text);
      require(backend.has_value(), "--kernel must be auto, scalar or avx2");
      config.backend = backend;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace slitfactor
