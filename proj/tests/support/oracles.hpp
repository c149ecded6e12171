#pragma once

// Test-only reference computations. Nothing here calls the library's
// closed-form or kernel paths.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

inline double integrate(auto&& f, double a, double b) {
  return GK::integrate(f, a, b, 10, 1e-14);
}

/// C(t), S(t) on an ascending grid by accumulating adaptive Gauss-Kronrod
/// integrals of cos / sin(pi u^2 / 2) over consecutive intervals.
struct FresnelTable {
  std::vector<double> t, c, s;
};

inline FresnelTable fresnel_table(double t_max, int intervals) {
  FresnelTable out;
  double c = 0.0, s = 0.0, prev = 0.0;
  for (int k = 0; k <= intervals; ++k) {
    const double t = t_max * k / intervals;
    c += integrate([](double u) { return std::cos(std::numbers::pi * u * u / 2); }, prev, t);
    s += integrate([](double u) { return std::sin(std::numbers::pi * u * u / 2); }, prev, t);
    prev = t;
    out.t.push_back(t);
    out.c.push_back(c);
    out.s.push_back(s);
  }
  return out;
}

/// int_{d - w/2}^{d + w/2} exp(i pi y^2 / n) dy by quadrature, split into
/// sub-intervals so each covers a bounded phase change.
inline std::complex<double> slit_integral(double d, double w, double n) {
  const double a = d - w / 2, b = d + w / 2;
  const int pieces = 1 + static_cast<int>(std::ceil(std::abs(d) * w));
  double re = 0.0, im = 0.0;
  for (int k = 0; k < pieces; ++k) {
    const double lo = a + (b - a) * k / pieces;
    const double hi = a + (b - a) * (k + 1) / pieces;
    re += integrate([n](double y) { return std::cos(std::numbers::pi * y * y / n); }, lo, hi);
    im += integrate([n](double y) { return std::sin(std::numbers::pi * y * y / n); }, lo, hi);
  }
  return {re, im};
}

/// Finite-slit field at chi from per-slit quadrature.
inline std::complex<double> kirchhoff_field(std::int64_t slits, double n, double fill,
                                            double chi) {
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t q = (1 - slits) / 2; q <= (slits - 1) / 2; ++q) {
    sum += slit_integral(static_cast<double>(q) - chi, fill, n);
  }
  return sum;
}

/// Odd divisors of value within [lo, hi] by enumeration.
inline std::vector<std::int64_t> odd_divisors(std::int64_t value, std::int64_t lo,
                                              std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = lo; d <= hi; ++d) {
    if (d % 2 == 1 && value % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace oracle
