#include "slitfactor/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "slitfactor/error.hpp"
#include "slitfactor/grating.hpp"
#include "slitfactor/kernels.hpp"
#include "slitfactor/parallel.hpp"
#include "slitfactor/special_functions.hpp"

namespace slitfactor {
namespace {

using std::numbers::pi;

void require_odd(std::int64_t v, const char* what) {
  if (v < 1 || !is_odd(v)) {
    throw InvalidInput(std::string(what) + " must be an odd integer >= 1, got " +
                       std::to_string(v));
  }
}

// exp(i pi k / n) for an integer k, reduced modulo 2n.
Complex unit_phase(std::int64_t k, std::int64_t n) {
  const std::int64_t period = 2 * n;
  std::int64_t r = k % period;
  if (r < 0) r += period;
  return std::polar(1.0, pi * static_cast<double>(r) / static_cast<double>(n));
}

SpikeSeries spike_series_at(std::int64_t slit_count, std::int64_t order, double n_eff,
                            unsigned threads) {
  SpikeSeries out{order, slit_count, SpikeModel::delta, {}};
  out.values.resize(static_cast<std::size_t>(peak_count(slit_count)));
  const std::int64_t first = (1 - slit_count) / 2;
  parallel_for(out.values.size(), threads, [&](std::size_t i) {
    const double chi = static_cast<double>(i + 1) + 0.5;
    out.values[i] = std::norm(
        kernels::chirp_sum(chi, first, static_cast<std::size_t>(slit_count), n_eff));
  });
  return out;
}

}  // namespace

std::string_view to_string(SpikeModel model) {
  switch (model) {
    case SpikeModel::delta: return "delta";
    case SpikeModel::fresnel: return "fresnel";
    case SpikeModel::fresnel_slit_averaged: return "fresnel_slit_averaged";
  }
  return "unknown";
}

double periodic_kernel(std::int64_t r, double v) {
  require_odd(r, "kernel order r");
  // Period one for odd r; reducing first keeps sin(pi r v) accurate for large v.
  const double w = v - std::nearbyint(v);
  if (std::fabs(w) < 1e-9) return static_cast<double>(r);
  return std::sin(pi * static_cast<double>(r) * w) / std::sin(pi * w);
}

Complex delta_amplitude(std::int64_t slit_count, std::int64_t order, double chi) {
  require_odd(slit_count, "slit count N");
  require_odd(order, "resonance order n");
  return kernels::chirp_sum(chi, (1 - slit_count) / 2, static_cast<std::size_t>(slit_count),
                            static_cast<double>(order));
}

Complex factored_delta_amplitude(std::int64_t slit_count, std::int64_t order, double chi) {
  require_odd(slit_count, "slit count N");
  require_odd(order, "resonance order n");
  if (slit_count % order != 0) {
    throw InvalidInput("factored amplitude needs n | N");
  }
  const double period = 2.0 * static_cast<double>(order);
  Complex group{0.0, 0.0};
  for (std::int64_t q = (1 - order) / 2; q <= (order - 1) / 2; ++q) {
    group += std::polar(1.0, 2.0 * pi * chirp_turns(chi - static_cast<double>(q), 0.0, period));
  }
  return periodic_kernel(slit_count / order, chi - 0.5) * group;
}

Complex phase_factor_f(std::int64_t l, std::int64_t n, std::int64_t p, std::int64_t q) {
  require_odd(n, "resonance order n");
  const double a = static_cast<double>(l) + 0.5;
  const double aq = a - static_cast<double>(q);
  const double ap = a - static_cast<double>(p);
  // Both squares end in .25, so the bracket is an exact integer in double.
  const double bracket = aq * aq - ap * ap;
  const double reduced = std::fmod(bracket, 2.0 * static_cast<double>(n));
  return std::polar(1.0, pi * reduced / static_cast<double>(n));
}

Complex phase_factor_f_product(std::int64_t l, std::int64_t n, std::int64_t p, std::int64_t q) {
  require_odd(n, "resonance order n");
  return unit_phase((q - p) * (q + p - 2 * l - 1), n);
}

Complex sigma_brute(std::int64_t l, std::int64_t n) {
  require_odd(n, "resonance order n");
  const std::int64_t lo = (1 - n) / 2;
  const std::int64_t hi = (n - 1) / 2;
  Complex sum{0.0, 0.0};
  for (std::int64_t p = lo; p <= hi; ++p) {
    for (std::int64_t q = lo; q <= hi; ++q) sum += phase_factor_f(l, n, p, q);
  }
  return sum;
}

SpikeSeries delta_spike_series(std::int64_t slit_count, std::int64_t order, unsigned threads) {
  require_odd(slit_count, "slit count N");
  require_odd(order, "resonance order n");
  if (slit_count < 3) throw InvalidInput("spike series needs N >= 3");
  if (order > slit_count) throw InvalidInput("resonance order n must not exceed N");
  return spike_series_at(slit_count, order, static_cast<double>(order), threads);
}

SpikeSeries delta_spike_series_detuned(std::int64_t slit_count, std::int64_t order,
                                       double detuning, unsigned threads) {
  require_odd(slit_count, "slit count N");
  require_odd(order, "resonance order n");
  if (slit_count < 3) throw InvalidInput("spike series needs N >= 3");
  if (!std::isfinite(detuning) || detuning <= -1.0) {
    throw InvalidInput("detuning must be finite and > -1");
  }
  return spike_series_at(slit_count, order, static_cast<double>(order) * (1.0 + detuning),
                         threads);
}

}  // namespace slitfactor
