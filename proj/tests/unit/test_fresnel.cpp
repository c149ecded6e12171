#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "slitfactor/error.hpp"
#include "slitfactor/fresnel.hpp"
#include "slitfactor/scan.hpp"

using namespace slitfactor;

TEST_CASE("kirchhoff_field rejects invalid fill") {
  CHECK_THROWS_AS(kirchhoff_field(55, 5.0, 0.0, 0.5), InvalidInput);
  CHECK_THROWS_AS(kirchhoff_field(55, 5.0, 1.0, 0.5), InvalidInput);
  CHECK_THROWS_AS(kirchhoff_field(55, -1.0, 0.1, 0.5), InvalidInput);
  CHECK_THROWS_AS(kirchhoff_field(54, 5.0, 0.1, 0.5), InvalidInput);
}

TEST_CASE("single centered slit gives an even profile") {
  for (double chi : {0.3, 1.1, 2.7}) {
    const double right = std::norm(kirchhoff_field(1, 11.0, 0.1, chi));
    const double left = std::norm(kirchhoff_field(1, 11.0, 0.1, -chi));
    CHECK(left == doctest::Approx(right).epsilon(1e-13));
  }
}

TEST_CASE("kirchhoff_field matches per-slit quadrature") {
  for (double fill : {0.01, 0.12, 0.4}) {
    for (double chi : {0.5, 3.5, 4.2, -6.9}) {
      const auto closed = kirchhoff_field(15, 5.0, fill, chi);
      const auto quad = oracle::kirchhoff_field(15, 5.0, fill, chi);
      CHECK(std::abs(closed - quad) <= 1e-12);
    }
  }
}

TEST_CASE("small slits reduce to the delta model") {
  // Integrand ~ constant over a slit of width 1e-3: field ~ fill * delta field.
  for (std::int64_t l = 1; l <= 27; ++l) {
    const double chi = static_cast<double>(l) + 0.5;
    const double ratio = std::norm(kirchhoff_field(55, 5.0, 1e-3, chi)) /
                         (1e-6 * std::norm(delta_amplitude(55, 5, chi)));
    CHECK(std::fabs(ratio - 1.0) <= 1e-3);
  }
}

TEST_CASE("kirchhoff spike series") {
  const SpikeSeries near_delta = kirchhoff_spike_series(143, 11, 0.0, 1e-3);
  CHECK(near_delta.model == SpikeModel::fresnel);
  CHECK(near_delta.values.size() == 71);
  CHECK(variation(near_delta).rms <= 1e-3);

  CHECK(variation(kirchhoff_spike_series(143, 17, 0.0, 1e-3)).rms > 0.01);
  CHECK(variation(kirchhoff_spike_series(143, 11, 0.0, 0.12)).rms > 0.1);

  const SpikeSeries delegated = kirchhoff_spike_series(3, 3, 0.0, 0.0);
  CHECK(delegated.model == SpikeModel::delta);
  CHECK(delegated.values[0] == doctest::Approx(3.0).epsilon(1e-14));

  for (double v : kirchhoff_spike_series(95, 7, 2e-4, 0.08).values) {
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
  }
}

TEST_CASE("finite-slit intensity is symmetric about the grating center") {
  for (std::int64_t l = 0; l < 30; ++l) {
    const double chi = static_cast<double>(l) + 0.5;
    const double right = std::norm(kirchhoff_field(61, 7.0, 0.05, chi));
    const double left = std::norm(kirchhoff_field(61, 7.0, 0.05, -chi));
    CHECK(left == doctest::Approx(right).epsilon(1e-12));
  }
}

TEST_CASE("slit-averaged series") {
  CHECK_THROWS_AS(slit_averaged_series(55, 5, 0.0), InvalidInput);

  const SpikeSeries avg = slit_averaged_series(55, 5, 1e-4);
  const SpikeSeries peak = kirchhoff_spike_series(55, 5, 0.0, 1e-4);
  CHECK(avg.model == SpikeModel::fresnel_slit_averaged);
  for (std::size_t i = 0; i < avg.values.size(); ++i) {
    CHECK(avg.values[i] == doctest::Approx(peak.values[i]).epsilon(1e-6));
  }

  const double small = variation(slit_averaged_series(141, 3, 0.005)).rms;
  const double large = variation(slit_averaged_series(141, 3, 0.05)).rms;
  CHECK(large >= 5.0 * small);
  CHECK(variation(slit_averaged_series(143, 13, 0.01)).rms < 0.05);
}

TEST_CASE("slit average of a constant-height region equals the Simpson average") {
  // Independent check of the quadrature weights: Simpson with 65 points
  // integrates the intensity; compare against GK on the same integrand.
  const double chi0 = 3.5, fill = 0.3;
  const double gk = oracle::integrate(
                        [&](double x) { return std::norm(kirchhoff_field(9, 3.0, fill, chi0 + x)); },
                        -fill / 2, fill / 2) /
                    fill;
  const SpikeSeries avg = slit_averaged_series(9, 3, fill);
  CHECK(avg.values[2] == doctest::Approx(gk).epsilon(1e-8));  // l = 3
}

TEST_CASE("pattern samples") {
  const auto fig1a = pattern_samples(143, 11, 0.0, 0.0, {-8.0, 8.0}, 200);
  CHECK(fig1a.size() == 16 * 200 + 1);
  CHECK(fig1a.front().chi == -8.0);
  CHECK(fig1a.back().chi == doctest::Approx(8.0).epsilon(1e-15));
  // Samples on the half-integers are the spikes; all have height N^2 / n.
  for (int l = -8; l < 8; ++l) {
    const auto& sample = fig1a[static_cast<std::size_t>((l + 8) * 200 + 100)];
    CHECK(sample.chi == doctest::Approx(l + 0.5).epsilon(1e-14));
    CHECK(sample.intensity == doctest::Approx(1859.0).epsilon(1e-9));
  }

  const auto fig1c = pattern_samples(143, 17, 0.0, 0.0, {-8.0, 8.0}, 200);
  std::vector<double> spike_heights;
  for (int l = -8; l < 8; ++l) {
    spike_heights.push_back(std::norm(delta_amplitude(143, 17, l + 0.5)));
  }
  const auto [lo17, hi17] = std::minmax_element(spike_heights.begin(), spike_heights.end());
  CHECK(*hi17 / *lo17 > 1.01);
  CHECK(fig1c.size() == fig1a.size());

  const auto single = pattern_samples(1, 1, 0.0, 0.1, {-2.0, 2.0}, 50);
  for (std::size_t i = 0; i < single.size(); ++i) {
    CHECK(single[i].intensity ==
          doctest::Approx(single[single.size() - 1 - i].intensity).epsilon(1e-12));
  }

  CHECK_THROWS_AS(pattern_samples(143, 11, 0.0, 0.0, {2.0, 1.0}, 201), InvalidInput);
  CHECK_THROWS_AS(pattern_samples(143, 11, 0.0, 0.0, {-1.0, 1.0}, 1), InvalidInput);
}

TEST_CASE("detuning curve peaks on resonance") {
  const auto curve = detuning_curve(55, 5, 1e-3, 1e-3, 101);
  REQUIRE(curve.size() == 101);
  CHECK(curve[50].detuning == 0.0);
  CHECK(curve.front().detuning == doctest::Approx(-1e-3).epsilon(1e-15));
  const auto best = std::max_element(curve.begin(), curve.end(), [](auto& a, auto& b) {
    return a.mean_intensity < b.mean_intensity;
  });
  CHECK(best - curve.begin() == 50);

  CHECK_THROWS_AS(detuning_curve(55, 5, 1e-3, 1e-3, 100), InvalidInput);
  for (const auto& p : detuning_curve(3, 1, 1e-3, 1e-2, 11)) CHECK(std::isfinite(p.mean_intensity));
}
