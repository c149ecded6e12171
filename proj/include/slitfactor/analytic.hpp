#pragma once

// Delta-slit (s -> 0) model of the N-slit interferometer.
//
// Screen coordinates are chi = x / a. At resonance order n the field of slit q
// is the unit phasor exp[i pi (chi - q)^2 / n]; proportionality constants are
// fixed to 1 so that a divisor n of N gives spike heights of exactly N^2 / n.

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

namespace slitfactor {

using Complex = std::complex<double>;

enum class SpikeModel { delta, fresnel, fresnel_slit_averaged };

std::string_view to_string(SpikeModel model);

/// Peak intensities at chi = l + 1/2 for l = 1 .. (N-1)/2; values[i] holds l = i + 1.
struct SpikeSeries {
  std::int64_t order = 1;
  std::int64_t slit_count = 1;
  SpikeModel model = SpikeModel::delta;
  std::vector<double> values;
};

/// Number of peaks l = 1 .. (N-1)/2 used by every statistic.
constexpr std::int64_t peak_count(std::int64_t slit_count) noexcept { return (slit_count - 1) / 2; }

/// P_r(v) = sin(pi r v) / sin(pi v); returns r within 1e-9 of an integer.
double periodic_kernel(std::int64_t r, double v);

/// Exact N-slit delta field sum_{q=(1-N)/2}^{(N-1)/2} exp[i pi (chi - q)^2 / n].
/// Valid for every odd n, divisor of N or not.
Complex delta_amplitude(std::int64_t slit_count, std::int64_t order, double chi);

/// Same field in the factored form P_r(chi - 1/2) * sum over one n-slit group.
/// Requires n | N; used to cross-check delta_amplitude.
Complex factored_delta_amplitude(std::int64_t slit_count, std::int64_t order, double chi);

/// f(l,n,p,q) = exp{(i pi / n) [(l + 1/2 - q)^2 - (l + 1/2 - p)^2]}.
Complex phase_factor_f(std::int64_t l, std::int64_t n, std::int64_t p, std::int64_t q);

/// The same factor written as exp[(i pi / n)(q - p)(q + p - 2l - 1)].
Complex phase_factor_f_product(std::int64_t l, std::int64_t n, std::int64_t p, std::int64_t q);

/// Brute-force double sum of f over p, q in [(1-n)/2, (n-1)/2], ascending p then q.
/// Equals n + 0i for every integer l when n is odd.
Complex sigma_brute(std::int64_t l, std::int64_t n);

/// |delta_amplitude(l + 1/2)|^2 for l = 1 .. (N-1)/2. threads = 0 uses all cores.
SpikeSeries delta_spike_series(std::int64_t slit_count, std::int64_t order, unsigned threads = 1);

/// Delta spike series at a non-integer effective order n (1 + detuning).
SpikeSeries delta_spike_series_detuned(std::int64_t slit_count, std::int64_t order,
                                       double detuning, unsigned threads = 1);

}  // namespace slitfactor
