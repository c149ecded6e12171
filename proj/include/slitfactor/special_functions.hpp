#pragma once

// Fresnel integrals C(t) = int_0^t cos(pi u^2 / 2) du, S(t) = int_0^t sin(pi u^2 / 2) du,
// and the closed-form chirp integral over one slit built from them.
//
// For |t| >= kFresnelSeriesLimit the integrals are written through the
// auxiliary functions f, g:
//   C(t) = 1/2 + f sin(phi) - g cos(phi),  S(t) = 1/2 - f cos(phi) - g sin(phi),
// phi = pi t^2 / 2, so the oscillation is carried by an exactly reduced phase
// and f, g are smooth.

#include <cmath>
#include <complex>

namespace slitfactor {

struct FresnelPair {
  double c = 0.0;
  double s = 0.0;
};

struct FresnelAux {
  double f = 0.0;
  double g = 0.0;
};

inline constexpr double kFresnelSeriesLimit = 1.6;
inline constexpr double kFresnelAsymptoticLimit = 6.0;
inline constexpr int kAsymptoticTerms = 11;

/// Throws InvalidInput for non-finite t.
FresnelPair fresnel_cs(double t);

/// Power series, accurate for |t| <= kFresnelSeriesLimit.
FresnelPair fresnel_series(double t);

/// f and g for x >= kFresnelSeriesLimit (continued fraction below
/// kFresnelAsymptoticLimit, asymptotic expansion above).
FresnelAux fresnel_aux(double x);
FresnelAux fresnel_aux_continued_fraction(double x);
FresnelAux fresnel_aux_asymptotic(double x);

/// Coefficients (4m-1)!! and (4m+1)!! of the asymptotic expansions of f and g.
const double* asymptotic_f_coefficients();
const double* asymptotic_g_coefficients();

/// (d + e)^2 / period reduced to [-1/2, 1/2] turns. d^2 is split exactly with an
/// FMA so the reduction stays accurate when d^2 / period is large.
inline double chirp_turns(double d, double e, double period) {
  const double hi = d * d;
  const double lo = std::fma(d, d, -hi);
  const double m = std::floor(hi / period);
  const double r = std::fma(-m, period, hi);
  const double t = (r + (lo + e * (2.0 * d + e))) / period;
  return t - std::nearbyint(t);
}

/// F(u2) - F(u1), F = C + i S, for the slit edges y = d -/+ width/2 scaled by
/// u = y * scale; period = 2 / scale^2 fixes the phase of each edge.
std::complex<double> slit_fresnel_difference(double d, double width, double scale, double period);

/// int_{d - w/2}^{d + w/2} exp(i pi y^2 / n_eff) dy, evaluated in closed form.
std::complex<double> slit_integral(double d, double width, double n_eff);

}  // namespace slitfactor
