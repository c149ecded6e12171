#include <cmath>
#include <numbers>

#include "slitfactor/kernels.hpp"
#include "slitfactor/special_functions.hpp"

namespace slitfactor::kernels::scalar {

std::complex<double> chirp_sum(double chi, std::int64_t first, std::size_t count, double n_eff) {
  const double period = 2.0 * n_eff;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    const double d = chi - static_cast<double>(first + static_cast<std::int64_t>(j));
    const double angle = 2.0 * std::numbers::pi * chirp_turns(d, 0.0, period);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  return {re, im};
}

std::complex<double> slit_sum(double chi, std::int64_t first, std::size_t count, double n_eff,
                              double fill) {
  const double scale = std::sqrt(2.0 / n_eff);
  const double period = 2.0 * n_eff;
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < count; ++j) {
    const double d = static_cast<double>(first + static_cast<std::int64_t>(j)) - chi;
    acc += slit_fresnel_difference(d, fill, scale, period);
  }
  return acc / scale;
}

}  // namespace slitfactor::kernels::scalar
