#pragma once

// Spike-height statistics, resonance-order scans, divisor detection and the
// recursive factoring driver.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slitfactor/analytic.hpp"

namespace slitfactor {

/// Detection thresholds on sigma. Divisors of N give a delta-model sigma that
/// is pure rounding; the finite-slit model needs fill <= max_detection_fill(N).
inline constexpr double kDeltaThreshold = 1e-9;
inline constexpr double kFresnelThreshold = 1e-4;

/// mean = (2/(N-1)) sum I_l, rms = sqrt((2/(N-1)) sum (1 - I_l / mean)^2).
struct VariationStats {
  double mean = 0.0;
  double rms = 0.0;
  std::int64_t peak_count = 0;
};

/// Throws InvalidInput for an empty series or a zero mean.
VariationStats variation(std::span<const double> values);
VariationStats variation(const SpikeSeries& series);

struct ScanModel {
  SpikeModel model = SpikeModel::delta;
  double fill = 0.0;
};

/// Spike series of the requested model at zero detuning.
SpikeSeries model_spike_series(std::int64_t slit_count, std::int64_t order, const ScanModel& model,
                               unsigned threads = 1);

struct ScanPoint {
  std::int64_t order = 0;
  double sigma = 0.0;
};

struct ScanCurve {
  std::int64_t slit_count = 0;
  ScanModel model;
  std::vector<ScanPoint> points;
};

/// sigma for every odd n in [3, N - 2], ascending. Parallel over n; the result
/// does not depend on the thread count (0 = all cores).
ScanCurve scan(std::int64_t slit_count, const ScanModel& model = {}, unsigned threads = 0);

/// Orders n with sigma <= threshold, ascending.
std::vector<std::int64_t> detect_divisors(const ScanCurve& curve, double threshold);

/// Prime factors in ascending order; empty for 1.
std::vector<std::uint64_t> trial_division(std::uint64_t value);

double default_threshold(SpikeModel model);

/// Largest fill at which the finite-slit model is used for detection.
double max_detection_fill(std::int64_t slit_count);

struct FactorReport {
  std::uint64_t input = 0;
  std::vector<std::uint64_t> divisors;  // ascending prime factors
  std::vector<ScanPoint> sigma_table;   // scan of the odd core
  double threshold = kDeltaThreshold;
  ScanModel model;
  bool oracle_agrees = false;
};

/// Strips factors of two, then repeatedly divides the odd core by the smallest
/// order detected by a scan until no order is detected. Throws
/// ConsistencyError if a detected order does not divide the core.
FactorReport factorize(std::uint64_t value, double threshold, const ScanModel& model = {},
                       unsigned threads = 0);

struct SlitWidthPoint {
  double fill = 0.0;
  double rescaled = 0.0;  // fill * N / n
  double sigma = 0.0;
};

struct SlitWidthCurve {
  std::int64_t slit_count = 0;
  std::int64_t order = 0;
  std::vector<SlitWidthPoint> points;
};

/// sigma_s at fill = fill_max * k / steps, k = 1 .. steps, preceded by the
/// fill = 0 limit taken from the delta model. Requires n | N.
SlitWidthCurve slit_width_sweep(std::int64_t slit_count, std::int64_t order, double fill_max,
                                int steps, unsigned threads = 0);

struct CollapseReport {
  /// Rescaled abscissa where sigma first reaches the level, per curve.
  std::vector<std::optional<double>> crossings;
  /// max / min and max - min over the present crossings; empty when fewer
  /// than two crossings exist.
  std::optional<double> ratio;
  std::optional<double> width;
};

CollapseReport collapse_check(std::span<const SlitWidthCurve> curves, double level);

}  // namespace slitfactor
