#include "slitfactor/fresnel.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "slitfactor/error.hpp"
#include "slitfactor/grating.hpp"
#include "slitfactor/kernels.hpp"
#include "slitfactor/parallel.hpp"

namespace slitfactor {
namespace {

void require_odd(std::int64_t v, const char* what) {
  if (v < 1 || !is_odd(v)) {
    throw InvalidInput(std::string(what) + " must be an odd integer >= 1, got " +
                       std::to_string(v));
  }
}

void require_fill(double fill) {
  if (!(fill > 0.0 && fill < 1.0)) {
    throw InvalidInput("fill ratio s/a must lie in (0, 1); use the delta model for s = 0");
  }
}

void require_series_args(std::int64_t slit_count, std::int64_t order) {
  require_odd(slit_count, "slit count N");
  require_odd(order, "resonance order n");
  if (slit_count < 3) throw InvalidInput("spike series needs N >= 3");
}

double effective_order(std::int64_t order, double detuning) {
  if (!std::isfinite(detuning) || detuning <= -1.0) {
    throw InvalidInput("detuning must be finite and > -1");
  }
  return static_cast<double>(order) * (1.0 + detuning);
}

double intensity(std::int64_t slit_count, double n_eff, double fill, double chi) {
  return std::norm(kernels::slit_sum(chi, (1 - slit_count) / 2,
                                     static_cast<std::size_t>(slit_count), n_eff, fill));
}

}  // namespace

Complex kirchhoff_field(std::int64_t slit_count, double n_eff, double fill, double chi) {
  require_odd(slit_count, "slit count N");
  require_fill(fill);
  if (!(std::isfinite(n_eff) && n_eff > 0.0)) {
    throw InvalidInput("effective order must be positive");
  }
  return kernels::slit_sum(chi, (1 - slit_count) / 2, static_cast<std::size_t>(slit_count),
                           n_eff, fill);
}

SpikeSeries kirchhoff_spike_series(std::int64_t slit_count, std::int64_t order, double detuning,
                                   double fill, unsigned threads) {
  require_series_args(slit_count, order);
  const double n_eff = effective_order(order, detuning);
  if (fill == 0.0) {
    return detuning == 0.0 ? delta_spike_series(slit_count, order, threads)
                           : delta_spike_series_detuned(slit_count, order, detuning, threads);
  }
  require_fill(fill);
  SpikeSeries out{order, slit_count, SpikeModel::fresnel, {}};
  out.values.resize(static_cast<std::size_t>(peak_count(slit_count)));
  parallel_for(out.values.size(), threads, [&](std::size_t i) {
    out.values[i] = intensity(slit_count, n_eff, fill, static_cast<double>(i + 1) + 0.5);
  });
  return out;
}

SpikeSeries slit_averaged_series(std::int64_t slit_count, std::int64_t order, double fill,
                                 unsigned threads) {
  require_series_args(slit_count, order);
  require_fill(fill);
  const double n_eff = static_cast<double>(order);
  constexpr int intervals = kSlitAverageSamples - 1;
  const double h = fill / intervals;

  SpikeSeries out{order, slit_count, SpikeModel::fresnel_slit_averaged, {}};
  out.values.resize(static_cast<std::size_t>(peak_count(slit_count)));
  parallel_for(out.values.size(), threads, [&](std::size_t i) {
    const double center = static_cast<double>(i + 1) + 0.5;
    double acc = 0.0;
    for (int k = 0; k <= intervals; ++k) {
      const double weight = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
      const double offset = -0.5 * fill + k * h;
      acc += weight * intensity(slit_count, n_eff, fill, center + offset);
    }
    // (1/s) * (h/3) * sum, with s = fill
    out.values[i] = acc * h / (3.0 * fill);
  });
  return out;
}

std::vector<PatternSample> pattern_samples(std::int64_t slit_count, std::int64_t order,
                                           double detuning, double fill, Window window,
                                           int samples_per_period, unsigned threads) {
  require_odd(slit_count, "slit count N");
  require_odd(order, "resonance order n");
  if (!(std::isfinite(window.lo) && std::isfinite(window.hi) && window.lo < window.hi)) {
    throw InvalidInput("pattern window must satisfy lo < hi");
  }
  if (samples_per_period < 2) throw InvalidInput("samples per period must be >= 2");
  if (fill != 0.0) require_fill(fill);
  const double n_eff = effective_order(order, detuning);

  const double spp = samples_per_period;
  const auto count =
      static_cast<std::size_t>(std::floor((window.hi - window.lo) * spp + 1e-9)) + 1;
  std::vector<PatternSample> out(count);
  const std::int64_t first = (1 - slit_count) / 2;
  parallel_for(count, threads, [&](std::size_t k) {
    const double chi = window.lo + static_cast<double>(k) / spp;
    const Complex field =
        fill == 0.0
            ? kernels::chirp_sum(chi, first, static_cast<std::size_t>(slit_count), n_eff)
            : kernels::slit_sum(chi, first, static_cast<std::size_t>(slit_count), n_eff, fill);
    out[k] = {chi, std::norm(field)};
  });
  return out;
}

std::vector<DetuningPoint> detuning_curve(std::int64_t slit_count, std::int64_t order,
                                          double fill, double max_detuning, int steps,
                                          unsigned threads) {
  require_series_args(slit_count, order);
  if (!(std::isfinite(max_detuning) && max_detuning > 0.0 && max_detuning < 1.0)) {
    throw InvalidInput("maximum detuning must lie in (0, 1)");
  }
  if (steps < 3 || steps % 2 == 0) {
    throw InvalidInput("detuning steps must be odd and >= 3 so that zero detuning is sampled");
  }
  if (fill != 0.0) require_fill(fill);
  const int center = (steps - 1) / 2;
  std::vector<DetuningPoint> out(static_cast<std::size_t>(steps));
  parallel_for(out.size(), threads, [&](std::size_t k) {
    const double detuning = max_detuning * (static_cast<double>(k) - center) / center;
    const SpikeSeries series = kirchhoff_spike_series(slit_count, order, detuning, fill, 1);
    const double sum = std::accumulate(series.values.begin(), series.values.end(), 0.0);
    out[k] = {detuning, sum / static_cast<double>(series.values.size())};
  });
  return out;
}

}  // namespace slitfactor
