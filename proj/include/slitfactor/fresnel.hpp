#pragma once

// Finite-slit model: each slit of width fill (in units of a) contributes the
// exact chirp integral of exp[i pi (xi - chi)^2 / n_eff] over its aperture.

#include <cstdint>
#include <vector>

#include "slitfactor/analytic.hpp"
#include "slitfactor/special_functions.hpp"

namespace slitfactor {

/// Simpson points used for the slit-width average of a peak.
inline constexpr int kSlitAverageSamples = 65;

/// Field of N slits of width fill centered on q = (1-N)/2 .. (N-1)/2.
/// Throws InvalidInput unless 0 < fill < 1 and n_eff > 0.
Complex kirchhoff_field(std::int64_t slit_count, double n_eff, double fill, double chi);

/// |kirchhoff_field(l + 1/2)|^2 at n_eff = n (1 + detuning). fill = 0 falls back
/// to the delta model.
SpikeSeries kirchhoff_spike_series(std::int64_t slit_count, std::int64_t order, double detuning,
                                   double fill, unsigned threads = 1);

/// Average of the finite-slit intensity over [l + 1/2 - fill/2, l + 1/2 + fill/2]
/// with a fixed 65-point composite Simpson rule.
SpikeSeries slit_averaged_series(std::int64_t slit_count, std::int64_t order, double fill,
                                 unsigned threads = 1);

struct PatternSample {
  double chi = 0.0;
  double intensity = 0.0;
};

struct Window {
  double lo = -8.0;
  double hi = 8.0;
};

/// Intensity on the grid chi_k = lo + k / samples_per_period, chi_k <= hi.
std::vector<PatternSample> pattern_samples(std::int64_t slit_count, std::int64_t order,
                                           double detuning, double fill, Window window,
                                           int samples_per_period, unsigned threads = 1);

struct DetuningPoint {
  double detuning = 0.0;
  double mean_intensity = 0.0;
};

/// Mean spike intensity over l = 1 .. (N-1)/2 on the symmetric grid
/// detuning_k = max_detuning (k - c) / c, c = (steps - 1) / 2. steps must be odd.
std::vector<DetuningPoint> detuning_curve(std::int64_t slit_count, std::int64_t order,
                                          double fill, double max_detuning, int steps,
                                          unsigned threads = 1);

}  // namespace slitfactor
