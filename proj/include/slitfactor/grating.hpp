#pragma once

#include <cstdint>

namespace slitfactor {

/// Default grating period and screen distance.
inline constexpr double kDefaultPeriod = 0.01;          // a, meters
inline constexpr double kDefaultScreenDistance = 10.0;  // R, meters

constexpr bool is_odd(std::int64_t v) noexcept { return (v % 2) != 0; }

/// Physical setup of an N-slit grating and its observation screen.
///
/// All lengths are SI meters. The fill ratio s/a is derived on demand so the
/// configuration has a single source of truth for the slit geometry.
class GratingConfig {
 public:
  /// Throws InvalidInput unless N >= 3 is odd, a > 0, 0 <= s < a and R > 0.
  GratingConfig(std::int64_t slit_count, double period, double slit_width,
                double screen_distance);

  /// a = 1 cm, R = 10 m, s = fill * a.
  static GratingConfig with_defaults(std::int64_t slit_count, double fill = 0.0);

  std::int64_t slit_count() const noexcept { return slit_count_; }
  double period() const noexcept { return period_; }
  double slit_width() const noexcept { return slit_width_; }
  double screen_distance() const noexcept { return screen_distance_; }
  double fill_ratio() const noexcept { return slit_width_ / period_; }

 private:
  std::int64_t slit_count_;
  double period_;
  double slit_width_;
  double screen_distance_;
};

/// An odd illumination order n with wavelength lambda_n = a^2 n / R.
/// The physical wavelength is lambda_n * (1 + detuning).
struct Resonance {
  std::int64_t order = 1;
  double wavelength = 0.0;
  double detuning = 0.0;

  double detuned_wavelength() const noexcept { return wavelength * (1.0 + detuning); }
};

/// Throws InvalidInput for even or non-positive n.
Resonance resonance_wavelength(const GratingConfig& cfg, std::int64_t n);
Resonance with_detuning(Resonance res, double detuning);

/// original = 2^powers_of_two * odd_core.
struct ReducedProblem {
  std::uint64_t original = 0;
  int powers_of_two = 0;
  std::uint64_t odd_core = 0;
};

/// Strips factors of two. Throws InvalidInput for N = 0.
ReducedProblem reduce_even(std::uint64_t n);

/// Screen abscissa of the l'th self-image spike, x = l a + a/2 (meters).
double spike_position(const GratingConfig& cfg, std::int64_t l);

/// Everything the simulation models need once lengths are measured in units
/// of a: the Fresnel phase becomes pi (chi' - chi)^2 / n_effective.
struct DimensionlessView {
  double n_effective = 1.0;
  double fill = 0.0;
};

DimensionlessView dimensionless_view(const GratingConfig& cfg, const Resonance& res);

}  // namespace slitfactor
