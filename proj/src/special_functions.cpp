#include "slitfactor/special_functions.hpp"

#include <array>
#include <numbers>

#include "slitfactor/error.hpp"

namespace slitfactor {
namespace {

using std::numbers::pi;

struct AsymptoticCoefficients {
  std::array<double, kAsymptoticTerms> f{};
  std::array<double, kAsymptoticTerms> g{};

  AsymptoticCoefficients() {
    f[0] = 1.0;
    g[0] = 1.0;
    for (int m = 1; m < kAsymptoticTerms; ++m) {
      f[m] = f[m - 1] * (4.0 * m - 3.0) * (4.0 * m - 1.0);
      g[m] = g[m - 1] * (4.0 * m - 1.0) * (4.0 * m + 1.0);
    }
  }
};

const AsymptoticCoefficients& coefficients() {
  static const AsymptoticCoefficients c;
  return c;
}

// C(u) + i S(u) at u = (d + e) * scale, phase pi u^2 / 2 taken from (d + e)^2 / period.
std::complex<double> fresnel_endpoint(double d, double e, double scale, double period) {
  const double u = (d + e) * scale;
  const double x = std::fabs(u);
  if (x <= kFresnelSeriesLimit) {
    const FresnelPair p = fresnel_series(u);
    return {p.c, p.s};
  }
  const FresnelAux a = fresnel_aux(x);
  const double angle = 2.0 * pi * chirp_turns(d, e, period);
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  const double sign = u < 0.0 ? -1.0 : 1.0;
  return {sign * (0.5 + sn * a.f - cs * a.g), sign * (0.5 - cs * a.f - sn * a.g)};
}

}  // namespace

const double* asymptotic_f_coefficients() { return coefficients().f.data(); }
const double* asymptotic_g_coefficients() { return coefficients().g.data(); }

FresnelPair fresnel_series(double t) {
  const double x = std::fabs(t);
  const double z = 0.5 * pi * x * x;
  double term = x;  // z^j / j! * x
  double c = 0.0;
  double s = 0.0;
  for (int j = 0; j < 200; ++j) {
    if (j > 0) term *= z / j;
    const double contrib = term / (2.0 * j + 1.0);
    const bool negative = (j / 2) % 2 == 1;
    double& acc = (j % 2 == 0) ? c : s;
    acc += negative ? -contrib : contrib;
    if (j > z && contrib < 1e-18) break;
  }
  return t < 0.0 ? FresnelPair{-c, -s} : FresnelPair{c, s};
}

FresnelAux fresnel_aux_continued_fraction(double x) {
  // Modified Lentz evaluation of the continued fraction for the complementary
  // error function along the Fresnel diagonal.
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, -pi * x * x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  double n = -1.0;
  for (int k = 2; k <= 2000; ++k) {
    n += 2.0;
    const double a = -n * (n + 1.0);
    b += 4.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < 2e-16) break;
  }
  h *= C(x, -x);
  const C aux = C(0.5, 0.5) * h;  // g + i f
  return {aux.imag(), aux.real()};
}

FresnelAux fresnel_aux_asymptotic(double x) {
  const auto& coef = coefficients();
  const double z = pi * x * x;
  const double w = -1.0 / (z * z);
  double fp = coef.f[kAsymptoticTerms - 1];
  double gp = coef.g[kAsymptoticTerms - 1];
  for (int m = kAsymptoticTerms - 2; m >= 0; --m) {
    fp = fp * w + coef.f[m];
    gp = gp * w + coef.g[m];
  }
  const double pix = pi * x;
  return {fp / pix, gp / (pix * z)};
}

FresnelAux fresnel_aux(double x) {
  return x < kFresnelAsymptoticLimit ? fresnel_aux_continued_fraction(x)
                                     : fresnel_aux_asymptotic(x);
}

FresnelPair fresnel_cs(double t) {
  if (!std::isfinite(t)) throw InvalidInput("fresnel_cs: argument must be finite");
  const double x = std::fabs(t);
  if (x <= kFresnelSeriesLimit) return fresnel_series(t);
  FresnelPair p{0.5, 0.5};
  // Beyond 1e15 the auxiliary terms are below 3e-16.
  if (x < 1e15) {
    const FresnelAux a = fresnel_aux(x);
    const double angle = 2.0 * pi * chirp_turns(x, 0.0, 4.0);
    const double cs = std::cos(angle);
    const double sn = std::sin(angle);
    p.c = 0.5 + a.f * sn - a.g * cs;
    p.s = 0.5 - a.f * cs - a.g * sn;
  }
  return t < 0.0 ? FresnelPair{-p.c, -p.s} : p;
}

std::complex<double> slit_fresnel_difference(double d, double width, double scale,
                                             double period) {
  const double half = 0.5 * width;
  const double x1 = std::fabs(d - half) * scale;
  const double x2 = std::fabs(d + half) * scale;
  const bool same_side = (d - half > 0.0) == (d + half > 0.0);
  if (!(same_side && x1 > kFresnelSeriesLimit && x2 > kFresnelSeriesLimit)) {
    return fresnel_endpoint(d, half, scale, period) - fresnel_endpoint(d, -half, scale, period);
  }
  // Both edges on the auxiliary branch: the constant 1/2 terms cancel exactly.
  const FresnelAux a1 = fresnel_aux(x1);
  const FresnelAux a2 = fresnel_aux(x2);
  const double ang1 = 2.0 * pi * chirp_turns(d, -half, period);
  const double ang2 = 2.0 * pi * chirp_turns(d, half, period);
  const double c1 = std::cos(ang1), s1 = std::sin(ang1);
  const double c2 = std::cos(ang2), s2 = std::sin(ang2);
  // e^{i phi} (f - i g) = X + i Y
  const double dx = (c2 * a2.f + s2 * a2.g) - (c1 * a1.f + s1 * a1.g);
  const double dy = (s2 * a2.f - c2 * a2.g) - (s1 * a1.f - c1 * a1.g);
  const double sign = d < 0.0 ? -1.0 : 1.0;
  return {sign * dy, -sign * dx};
}

std::complex<double> slit_integral(double d, double width, double n_eff) {
  const double scale = std::sqrt(2.0 / n_eff);
  return slit_fresnel_difference(d, width, scale, 2.0 * n_eff) / scale;
}

}  // namespace slitfactor
