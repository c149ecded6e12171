// AVX2 + FMA variants of the model kernels. This translation unit is compiled
// with -mavx2 -mfma and only called after a runtime CPU check.

#include <immintrin.h>

#include <array>
#include <cmath>
#include <numbers>

#include "slitfactor/kernels.hpp"
#include "slitfactor/special_functions.hpp"

namespace slitfactor::kernels::avx2 {
namespace {

constexpr double inverse_factorial(int k) {
  double v = 1.0;
  for (int i = 2; i <= k; ++i) v /= i;
  return v;
}

// Taylor coefficients of sin(x)/x and cos(x) in z = x^2, |x| <= pi/4.
constexpr std::array<double, 9> kSinCoef = [] {
  std::array<double, 9> c{};
  for (int k = 0; k < 9; ++k) c[k] = (k % 2 ? -1.0 : 1.0) * inverse_factorial(2 * k + 1);
  return c;
}();
constexpr std::array<double, 10> kCosCoef = [] {
  std::array<double, 10> c{};
  for (int k = 0; k < 10; ++k) c[k] = (k % 2 ? -1.0 : 1.0) * inverse_factorial(2 * k);
  return c;
}();

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// sin and cos of 2 pi t for t in [-1/2, 1/2].
inline void sincos_turns(__m256d t, __m256d& sin_out, __m256d& cos_out) {
  const __m256d j = _mm256_round_pd(_mm256_mul_pd(t, splat(4.0)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d r = _mm256_fnmadd_pd(j, splat(0.25), t);
  const __m256d x = _mm256_mul_pd(r, splat(2.0 * std::numbers::pi));
  const __m256d z = _mm256_mul_pd(x, x);

  __m256d ps = splat(kSinCoef[8]);
  for (int k = 7; k >= 0; --k) ps = _mm256_fmadd_pd(ps, z, splat(kSinCoef[k]));
  const __m256d sx = _mm256_mul_pd(x, ps);
  __m256d cx = splat(kCosCoef[9]);
  for (int k = 8; k >= 0; --k) cx = _mm256_fmadd_pd(cx, z, splat(kCosCoef[k]));

  // Quadrant jm = j mod 4 rotates (cos, sin) by jm quarter turns.
  const __m256d jm = _mm256_fnmadd_pd(_mm256_floor_pd(_mm256_mul_pd(j, splat(0.25))),
                                      splat(4.0), j);
  const __m256d odd = _mm256_or_pd(_mm256_cmp_pd(jm, splat(1.0), _CMP_EQ_OQ),
                                   _mm256_cmp_pd(jm, splat(3.0), _CMP_EQ_OQ));
  const __m256d sin_neg = _mm256_cmp_pd(jm, splat(2.0), _CMP_GE_OQ);
  const __m256d cos_neg = _mm256_and_pd(_mm256_cmp_pd(jm, splat(1.0), _CMP_GE_OQ),
                                        _mm256_cmp_pd(jm, splat(2.0), _CMP_LE_OQ));
  const __m256d sign_bit = splat(-0.0);
  sin_out = _mm256_xor_pd(_mm256_blendv_pd(sx, cx, odd), _mm256_and_pd(sin_neg, sign_bit));
  cos_out = _mm256_xor_pd(_mm256_blendv_pd(cx, sx, odd), _mm256_and_pd(cos_neg, sign_bit));
}

// Lane-wise chirp_turns(d, e, period); same operation order as the scalar helper.
inline __m256d turns(__m256d d, __m256d e, __m256d period) {
  const __m256d hi = _mm256_mul_pd(d, d);
  const __m256d lo = _mm256_fmsub_pd(d, d, hi);
  const __m256d m = _mm256_floor_pd(_mm256_div_pd(hi, period));
  const __m256d r = _mm256_fnmadd_pd(m, period, hi);
  const __m256d cross = _mm256_mul_pd(e, _mm256_add_pd(_mm256_mul_pd(splat(2.0), d), e));
  const __m256d t = _mm256_div_pd(_mm256_add_pd(r, _mm256_add_pd(lo, cross)), period);
  return _mm256_sub_pd(t, _mm256_round_pd(t, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC));
}

inline double horizontal_sum(__m256d v) {
  const __m128d pair = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

inline __m256d slit_indices(std::int64_t q) {
  const double base = static_cast<double>(q);
  return _mm256_setr_pd(base, base + 1.0, base + 2.0, base + 3.0);
}

struct Aux {
  __m256d f;
  __m256d g;
};

inline Aux aux_asymptotic(__m256d x) {
  const double* fc = asymptotic_f_coefficients();
  const double* gc = asymptotic_g_coefficients();
  const __m256d z = _mm256_mul_pd(splat(std::numbers::pi), _mm256_mul_pd(x, x));
  const __m256d w = _mm256_div_pd(splat(-1.0), _mm256_mul_pd(z, z));
  __m256d fp = splat(fc[kAsymptoticTerms - 1]);
  __m256d gp = splat(gc[kAsymptoticTerms - 1]);
  for (int m = kAsymptoticTerms - 2; m >= 0; --m) {
    fp = _mm256_add_pd(_mm256_mul_pd(fp, w), splat(fc[m]));
    gp = _mm256_add_pd(_mm256_mul_pd(gp, w), splat(gc[m]));
  }
  const __m256d pix = _mm256_mul_pd(splat(std::numbers::pi), x);
  return {_mm256_div_pd(fp, pix), _mm256_div_pd(gp, _mm256_mul_pd(pix, z))};
}

}  // namespace

std::complex<double> chirp_sum(double chi, std::int64_t first, std::size_t count, double n_eff) {
  const __m256d period = splat(2.0 * n_eff);
  const __m256d vchi = splat(chi);
  const __m256d zero = _mm256_setzero_pd();
  __m256d re = zero;
  __m256d im = zero;
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d d = _mm256_sub_pd(vchi, slit_indices(first + static_cast<std::int64_t>(j)));
    __m256d s, c;
    sincos_turns(turns(d, zero, period), s, c);
    re = _mm256_add_pd(re, c);
    im = _mm256_add_pd(im, s);
  }
  if (j < count) {
    const __m256d lane = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
    const __m256d active =
        _mm256_cmp_pd(lane, splat(static_cast<double>(count - j)), _CMP_LT_OQ);
    const __m256d d = _mm256_sub_pd(vchi, slit_indices(first + static_cast<std::int64_t>(j)));
    __m256d s, c;
    sincos_turns(turns(d, zero, period), s, c);
    re = _mm256_add_pd(re, _mm256_and_pd(c, active));
    im = _mm256_add_pd(im, _mm256_and_pd(s, active));
  }
  return {horizontal_sum(re), horizontal_sum(im)};
}

std::complex<double> slit_sum(double chi, std::int64_t first, std::size_t count, double n_eff,
                              double fill) {
  const double scale = std::sqrt(2.0 / n_eff);
  const double period = 2.0 * n_eff;
  const double half = 0.5 * fill;

  const __m256d vperiod = splat(period);
  const __m256d vscale = splat(scale);
  const __m256d vchi = splat(chi);
  const __m256d vhalf = splat(half);
  const __m256d vneg_half = splat(-half);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256d sign_bit = splat(-0.0);

  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::complex<double> rest{0.0, 0.0};

  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const std::int64_t q0 = first + static_cast<std::int64_t>(j);
    const __m256d d = _mm256_sub_pd(slit_indices(q0), vchi);
    const __m256d x1 = _mm256_mul_pd(_mm256_and_pd(_mm256_sub_pd(d, vhalf), abs_mask), vscale);
    const __m256d x2 = _mm256_mul_pd(_mm256_and_pd(_mm256_add_pd(d, vhalf), abs_mask), vscale);
    const __m256d far = _mm256_cmp_pd(_mm256_min_pd(x1, x2), splat(kFresnelAsymptoticLimit),
                                      _CMP_GE_OQ);
    if (_mm256_movemask_pd(far) != 0xF) {
      // Slits near the observation point need the series / continued fraction.
      for (int k = 0; k < 4; ++k) {
        const double dk = static_cast<double>(q0 + k) - chi;
        rest += slit_fresnel_difference(dk, fill, scale, period);
      }
      continue;
    }
    const Aux a1 = aux_asymptotic(x1);
    const Aux a2 = aux_asymptotic(x2);
    __m256d s1, c1, s2, c2;
    sincos_turns(turns(d, vneg_half, vperiod), s1, c1);
    sincos_turns(turns(d, vhalf, vperiod), s2, c2);
    const __m256d dx = _mm256_sub_pd(
        _mm256_add_pd(_mm256_mul_pd(c2, a2.f), _mm256_mul_pd(s2, a2.g)),
        _mm256_add_pd(_mm256_mul_pd(c1, a1.f), _mm256_mul_pd(s1, a1.g)));
    const __m256d dy = _mm256_sub_pd(
        _mm256_sub_pd(_mm256_mul_pd(s2, a2.f), _mm256_mul_pd(c2, a2.g)),
        _mm256_sub_pd(_mm256_mul_pd(s1, a1.f), _mm256_mul_pd(c1, a1.g)));
    const __m256d sign = _mm256_and_pd(d, sign_bit);
    re = _mm256_add_pd(re, _mm256_xor_pd(dy, sign));
    im = _mm256_sub_pd(im, _mm256_xor_pd(dx, sign));
  }
  for (; j < count; ++j) {
    const double dj = static_cast<double>(first + static_cast<std::int64_t>(j)) - chi;
    rest += slit_fresnel_difference(dj, fill, scale, period);
  }
  const std::complex<double> total{horizontal_sum(re) + rest.real(),
                                   horizontal_sum(im) + rest.imag()};
  return total / scale;
}

}  // namespace slitfactor::kernels::avx2
