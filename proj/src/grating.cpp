#include "slitfactor/grating.hpp"

#include <cmath>
#include <string>

#include "slitfactor/error.hpp"

namespace slitfactor {

GratingConfig::GratingConfig(std::int64_t slit_count, double period, double slit_width,
                             double screen_distance)
    : slit_count_(slit_count),
      period_(period),
      slit_width_(slit_width),
      screen_distance_(screen_distance) {
  if (slit_count < 3 || !is_odd(slit_count)) {
    throw InvalidInput("slit count must be an odd integer >= 3, got " +
                       std::to_string(slit_count));
  }
  if (!(std::isfinite(period) && period > 0.0)) {
    throw InvalidInput("grating period must be positive and finite");
  }
  if (!(std::isfinite(slit_width) && slit_width >= 0.0 && slit_width < period)) {
    throw InvalidInput("slit width must satisfy 0 <= s < a");
  }
  if (!(std::isfinite(screen_distance) && screen_distance > 0.0)) {
    throw InvalidInput("screen distance must be positive and finite");
  }
}

GratingConfig GratingConfig::with_defaults(std::int64_t slit_count, double fill) {
  return GratingConfig(slit_count, kDefaultPeriod, fill * kDefaultPeriod,
                       kDefaultScreenDistance);
}

Resonance resonance_wavelength(const GratingConfig& cfg, std::int64_t n) {
  if (n < 1 || !is_odd(n)) {
    throw InvalidInput("resonance order must be odd and >= 1, got " + std::to_string(n));
  }
  const double a = cfg.period();
  return Resonance{n, a * a * static_cast<double>(n) / cfg.screen_distance(), 0.0};
}

Resonance with_detuning(Resonance res, double detuning) {
  if (!std::isfinite(detuning) || detuning <= -1.0) {
    throw InvalidInput("detuning must be finite and > -1");
  }
  res.detuning = detuning;
  return res;
}

ReducedProblem reduce_even(std::uint64_t n) {
  if (n == 0) throw InvalidInput("cannot factor 0");
  ReducedProblem out{n, 0, n};
  while (out.odd_core % 2 == 0) {
    out.odd_core /= 2;
    ++out.powers_of_two;
  }
  return out;
}

double spike_position(const GratingConfig& cfg, std::int64_t l) {
  return (static_cast<double>(l) + 0.5) * cfg.period();
}

DimensionlessView dimensionless_view(const GratingConfig& cfg, const Resonance& res) {
  return {static_cast<double>(res.order) * (1.0 + res.detuning), cfg.fill_ratio()};
}

}  // namespace slitfactor
