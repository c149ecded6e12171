#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "slitfactor/error.hpp"
#include "slitfactor/scan.hpp"

using namespace slitfactor;

TEST_CASE("variation statistics") {
  const std::vector<double> v{1.0, 1.0, 1.0, 3.0};
  const auto stats = variation(v);
  CHECK(stats.mean == doctest::Approx(1.5));
  CHECK(stats.rms == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  CHECK(stats.peak_count == 4);

  const std::vector<double> flat(7, 2.5);
  CHECK(variation(flat).rms == 0.0);

  CHECK_THROWS_AS(variation(std::vector<double>{}), InvalidInput);
  CHECK_THROWS_AS(variation(std::vector<double>(3, 0.0)), InvalidInput);

  std::vector<double> scaled = v;
  for (double& x : scaled) x *= 1024.0;
  CHECK(variation(scaled).rms == variation(v).rms);
}

TEST_CASE("delta scans vanish exactly at odd divisors") {
  for (std::int64_t N : {143, 105, 55, 139}) {
    const ScanCurve curve = scan(N);
    CHECK(curve.points.size() == static_cast<std::size_t>((N - 3) / 2));
    const auto expected = oracle::odd_divisors(N, 3, N - 2);
    CHECK(detect_divisors(curve, kDeltaThreshold) == expected);
    for (const auto& p : curve.points) {
      if (N % p.order != 0) CHECK(p.sigma > 1e-6);
    }
  }
  CHECK(detect_divisors(scan(139), 10.0).size() == 68);
  CHECK_THROWS_AS(detect_divisors(scan(15), 0.0), InvalidInput);
  CHECK_THROWS_AS(scan(144), InvalidInput);
  CHECK(scan(5).points.size() == 1);
}

TEST_CASE("scan is independent of the thread count") {
  const ScanCurve one = scan(119, {}, 1);
  const ScanCurve three = scan(119, {}, 3);
  REQUIRE(one.points.size() == three.points.size());
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    CHECK(one.points[i].sigma == three.points[i].sigma);
  }
}

TEST_CASE("trial division") {
  CHECK(trial_division(1).empty());
  CHECK(trial_division(143) == std::vector<std::uint64_t>{11, 13});
  CHECK(trial_division(56) == std::vector<std::uint64_t>{2, 2, 2, 7});
  CHECK(trial_division(9) == std::vector<std::uint64_t>{3, 3});
}

TEST_CASE("factorize") {
  const auto r143 = factorize(143, kDeltaThreshold);
  CHECK(r143.divisors == std::vector<std::uint64_t>{11, 13});
  CHECK(r143.oracle_agrees);
  CHECK(r143.sigma_table.size() == 70);

  CHECK(factorize(105, kDeltaThreshold).divisors == std::vector<std::uint64_t>{3, 5, 7});
  CHECK(factorize(139, kDeltaThreshold).divisors == std::vector<std::uint64_t>{139});
  CHECK(factorize(56, kDeltaThreshold).divisors == std::vector<std::uint64_t>{2, 2, 2, 7});
  CHECK(factorize(64, kDeltaThreshold).divisors == std::vector<std::uint64_t>(6, 2));
  CHECK(factorize(1, kDeltaThreshold).divisors.empty());
  CHECK(factorize(3, kDeltaThreshold).divisors == std::vector<std::uint64_t>{3});
  CHECK(factorize(27, kDeltaThreshold).divisors == std::vector<std::uint64_t>{3, 3, 3});

  CHECK_THROWS_AS(factorize(143, 0.0), InvalidInput);
  CHECK_THROWS_AS(factorize(0, kDeltaThreshold), InvalidInput);

  for (std::uint64_t v = 9; v <= 121; v += 2) {
    const auto r = factorize(v, kDeltaThreshold);
    CHECK(r.oracle_agrees);
    CHECK(r.divisors == trial_division(v));
  }
}

TEST_CASE("factorize with the finite-slit model") {
  const ScanModel model{SpikeModel::fresnel, max_detection_fill(143)};
  const auto r = factorize(143, kFresnelThreshold, model);
  CHECK(r.divisors == std::vector<std::uint64_t>{11, 13});
  CHECK(r.model.model == SpikeModel::fresnel);
  CHECK_THROWS_AS(factorize(143, kFresnelThreshold, {SpikeModel::fresnel, 0.1}), InvalidInput);
  CHECK_THROWS_AS(factorize(143, kFresnelThreshold, {SpikeModel::fresnel, 0.0}), InvalidInput);
}

TEST_CASE("slit-width sweep") {
  const SlitWidthCurve curve = slit_width_sweep(143, 11, 0.01, 4);
  REQUIRE(curve.points.size() == 5);
  CHECK(curve.points[0].fill == 0.0);
  CHECK(curve.points[0].sigma <= kDeltaThreshold);
  CHECK(curve.points[4].fill == doctest::Approx(0.01));
  CHECK(curve.points[4].rescaled == doctest::Approx(0.13).epsilon(1e-14));
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    CHECK(curve.points[i].sigma > curve.points[i - 1].sigma);
  }
  CHECK_THROWS_AS(slit_width_sweep(143, 17, 0.01, 4), InvalidInput);
  CHECK_THROWS_AS(slit_width_sweep(143, 11, 0.0, 4), InvalidInput);
  CHECK_THROWS_AS(slit_width_sweep(143, 11, 0.01, 1), InvalidInput);
}

TEST_CASE("collapse check") {
  const SlitWidthCurve a = slit_width_sweep(55, 5, 0.1, 10);
  const std::vector<SlitWidthCurve> same{a, a};
  const auto rep = collapse_check(same, 0.05);
  REQUIRE(rep.ratio.has_value());
  CHECK(*rep.ratio == 1.0);
  CHECK(*rep.width == 0.0);

  const auto none = collapse_check(same, 1e6);
  CHECK_FALSE(none.crossings[0].has_value());
  CHECK_FALSE(none.ratio.has_value());

  // Curves indexed by fill N / n overlap: crossings agree to a few percent.
  const std::vector<SlitWidthCurve> curves{slit_width_sweep(55, 5, 0.12, 24),
                                           slit_width_sweep(95, 19, 0.12, 24),
                                           slit_width_sweep(143, 13, 0.1, 20)};
  const auto collapse = collapse_check(curves, 0.1);
  REQUIRE(collapse.ratio.has_value());
  CHECK(*collapse.ratio <= 1.05);
}
