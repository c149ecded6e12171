#include "slitfactor/scan.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slitfactor/error.hpp"
#include "slitfactor/fresnel.hpp"
#include "slitfactor/grating.hpp"
#include "slitfactor/parallel.hpp"

namespace slitfactor {

VariationStats variation(std::span<const double> values) {
  if (values.empty()) throw InvalidInput("variation of an empty spike series");
  const double count = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / count;
  if (!(mean > 0.0)) throw InvalidInput("variation undefined for zero mean intensity");
  double sq = 0.0;
  for (double v : values) {
    const double dev = 1.0 - v / mean;
    sq += dev * dev;
  }
  return {mean, std::sqrt(sq / count), static_cast<std::int64_t>(values.size())};
}

VariationStats variation(const SpikeSeries& series) { return variation(series.values); }

SpikeSeries model_spike_series(std::int64_t slit_count, std::int64_t order, const ScanModel& model,
                               unsigned threads) {
  switch (model.model) {
    case SpikeModel::delta: return delta_spike_series(slit_count, order, threads);
    case SpikeModel::fresnel:
      return kirchhoff_spike_series(slit_count, order, 0.0, model.fill, threads);
    case SpikeModel::fresnel_slit_averaged:
      return slit_averaged_series(slit_count, order, model.fill, threads);
  }
  throw InvalidInput("unknown spike model");
}

ScanCurve scan(std::int64_t slit_count, const ScanModel& model, unsigned threads) {
  if (slit_count < 3 || !is_odd(slit_count)) {
    throw InvalidInput("scan needs an odd slit count >= 3, got " + std::to_string(slit_count));
  }
  ScanCurve curve{slit_count, model, {}};
  for (std::int64_t n = 3; n <= slit_count - 2; n += 2) curve.points.push_back({n, 0.0});
  parallel_for(curve.points.size(), threads, [&](std::size_t i) {
    curve.points[i].sigma =
        variation(model_spike_series(slit_count, curve.points[i].order, model, 1)).rms;
  });
  return curve;
}

std::vector<std::int64_t> detect_divisors(const ScanCurve& curve, double threshold) {
  if (!(threshold > 0.0)) throw InvalidInput("detection threshold must be positive");
  std::vector<std::int64_t> out;
  for (const ScanPoint& p : curve.points) {
    if (p.sigma <= threshold) out.push_back(p.order);
  }
  return out;
}

std::vector<std::uint64_t> trial_division(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      out.push_back(p);
      value /= p;
    }
  }
  if (value > 1) out.push_back(value);
  return out;
}

double default_threshold(SpikeModel model) {
  return model == SpikeModel::delta ? kDeltaThreshold : kFresnelThreshold;
}

double max_detection_fill(std::int64_t slit_count) {
  return std::min(1.0 / (50.0 * static_cast<double>(slit_count)), 1e-3);
}

FactorReport factorize(std::uint64_t value, double threshold, const ScanModel& model,
                       unsigned threads) {
  if (!(std::isfinite(threshold) && threshold > 0.0)) {
    throw InvalidInput("detection threshold must be positive");
  }
  const ReducedProblem reduced = reduce_even(value);
  if (model.model != SpikeModel::delta && reduced.odd_core >= 3 &&
      !(model.fill > 0.0 &&
        model.fill <= max_detection_fill(static_cast<std::int64_t>(reduced.odd_core)))) {
    throw InvalidInput("finite-slit factoring needs 0 < fill <= min(1/(2N), 1e-3)");
  }

  FactorReport report;
  report.input = value;
  report.threshold = threshold;
  report.model = model;
  report.divisors.assign(static_cast<std::size_t>(reduced.powers_of_two), 2);

  std::uint64_t core = reduced.odd_core;
  bool first_round = true;
  while (core > 1) {
    const ScanCurve curve = scan(static_cast<std::int64_t>(core), model, threads);
    if (first_round) report.sigma_table = curve.points;
    first_round = false;
    const std::vector<std::int64_t> detected = detect_divisors(curve, threshold);
    if (detected.empty()) {
      report.divisors.push_back(core);
      break;
    }
    const auto divisor = static_cast<std::uint64_t>(detected.front());
    if (core % divisor != 0) {
      throw ConsistencyError("order " + std::to_string(divisor) + " detected as a divisor of " +
                             std::to_string(core) + " but does not divide it");
    }
    report.divisors.push_back(divisor);
    core /= divisor;
  }
  std::sort(report.divisors.begin(), report.divisors.end());
  report.oracle_agrees = report.divisors == trial_division(value);
  return report;
}

SlitWidthCurve slit_width_sweep(std::int64_t slit_count, std::int64_t order, double fill_max,
                                int steps, unsigned threads) {
  if (slit_count < 3 || !is_odd(slit_count) || order < 1 || !is_odd(order)) {
    throw InvalidInput("sweep needs odd N >= 3 and odd n >= 1");
  }
  if (slit_count % order != 0) {
    throw InvalidInput("slit-width sweep is defined for divisor pairs: " + std::to_string(order) +
                       " does not divide " + std::to_string(slit_count));
  }
  if (!(fill_max > 0.0 && fill_max <= 0.5)) throw InvalidInput("fill_max must lie in (0, 0.5]");
  if (steps < 2) throw InvalidInput("sweep needs at least 2 steps");

  const double ratio = static_cast<double>(slit_count) / static_cast<double>(order);
  SlitWidthCurve curve{slit_count, order, {}};
  curve.points.resize(static_cast<std::size_t>(steps) + 1);
  curve.points[0] = {0.0, 0.0, variation(delta_spike_series(slit_count, order, 1)).rms};
  parallel_for(static_cast<std::size_t>(steps), threads, [&](std::size_t i) {
    const double fill = fill_max * static_cast<double>(i + 1) / steps;
    const double sigma = variation(slit_averaged_series(slit_count, order, fill, 1)).rms;
    curve.points[i + 1] = {fill, fill * ratio, sigma};
  });
  return curve;
}

CollapseReport collapse_check(std::span<const SlitWidthCurve> curves, double level) {
  if (curves.size() < 2) throw InvalidInput("collapse check needs at least two curves");
  if (!(level > 0.0)) throw InvalidInput("collapse level must be positive");
  CollapseReport report;
  for (const SlitWidthCurve& c : curves) {
    std::optional<double> crossing;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const SlitWidthPoint& hi = c.points[i];
      if (hi.sigma < level) continue;
      if (i == 0) {
        crossing = hi.rescaled;
      } else {
        const SlitWidthPoint& lo = c.points[i - 1];
        crossing = lo.rescaled +
                   (level - lo.sigma) * (hi.rescaled - lo.rescaled) / (hi.sigma - lo.sigma);
      }
      break;
    }
    report.crossings.push_back(crossing);
  }
  double lo = 0.0, hi = 0.0;
  int present = 0;
  for (const auto& x : report.crossings) {
    if (!x) continue;
    lo = present == 0 ? *x : std::min(lo, *x);
    hi = present == 0 ? *x : std::max(hi, *x);
    ++present;
  }
  if (present >= 2) {
    report.ratio = hi / lo;
    report.width = hi - lo;
  }
  return report;
}

}  // namespace slitfactor
