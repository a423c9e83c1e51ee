// Copyright 2026 The Astopo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "astopo/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "support/oracles.hpp"

namespace astopo {
namespace {

constexpr double kM = 2.11;
constexpr double kP = 0.07;

TEST_CASE("constants at the headline parameter point") {
  const TheoryConstants c = constants(kM, kP);
  CHECK(c.lambda1 == doctest::Approx(0.727949806673912).epsilon(1e-12));
  CHECK(c.lambda2 == doctest::Approx(-0.6281136902722643).epsilon(1e-12));
  CHECK(c.A * c.A == doctest::Approx(kP * kP + 4.0 * kM * (kM - 1.0))
                         .epsilon(1e-15));
  CHECK(c.B == doctest::Approx(2.0 * (1.0 + kP) * kM - kP * kP));
  CHECK(c.C == doctest::Approx(c.B / c.A));
  CHECK(c.D == doctest::Approx(kP / (4.0 * kM * (1.0 + kP))));
  CHECK(c.G == doctest::Approx(c.D * c.C + 0.5 + c.D * c.A));
  CHECK(1.0 + 1.0 / c.lambda1 ==
        doctest::Approx(2.373721087404525).epsilon(1e-12));
}

TEST_CASE("constants reduce algebraically at p = 0") {
  const TheoryConstants c = constants(2.0, 0.0);
  CHECK(c.lambda1 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(1.0 + 1.0 / c.lambda1 ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("lambda2 vanishes exactly at p = 1") {
  const TheoryConstants c = constants(2.0, 1.0);
  CHECK(c.lambda2 == 0.0);
  CHECK(c.lambda1 > 0.0);
}

TEST_CASE("constants domain checks") {
  CHECK_THROWS_AS(constants(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(constants(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(constants(2.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(constants(2.0, 1.1), std::invalid_argument);
  for (double p : {0.0, 0.25, 0.5, 0.75, 0.9}) {
    for (double m : {1.2, 2.0, 2.11, 3.5, 8.0}) {
      const TheoryConstants c = constants(m, p);
      CHECK(c.lambda1 > 0.0);
      CHECK(c.lambda2 < 0.0);
      CHECK(1.0 + 1.0 / c.lambda1 > 2.0);
    }
  }
}

TEST_CASE("degree_trajectory honors its initial conditions") {
  for (double p : {0.0, 0.07, 0.5, 1.0}) {
    const auto [k, y] = degree_trajectory(2.11, p, 1.0);
    CHECK(k == doctest::Approx(p).epsilon(1e-14));
    CHECK(y == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(degree_trajectory(2.11, 0.07, 0.999), std::invalid_argument);
}

TEST_CASE("degree_trajectory agrees with numerical integration") {
  const std::vector<std::pair<double, double>> points = {
      {2.11, 0.07}, {2.0, 0.0}, {3.0, 0.5}, {1.5, 1.0}, {2.0, 1.0}};
  for (const auto& [m, p] : points) {
    for (double tau : {2.0, 10.0, 100.0, 1000.0, 15000.0}) {
      const auto [k, y] = degree_trajectory(m, p, tau);
      const auto [rk, ry] = oracles::integrate_trajectory(m, p, tau);
      if (k > 1e-12) CHECK(std::abs(k - rk) / k < 1e-6);
      CHECK(std::abs(y - ry) / y < 1e-6);
    }
  }
}

TEST_CASE("degree_trajectory satisfies the differential system") {
  // Residual check via Richardson-extrapolated central differences:
  // tau * k' must equal a*k + b*y (and likewise for y).
  const double m = kM, p = kP;
  const double a = p * (m - 1.0) / (m * (1.0 + p));
  const double b = 1.0 / (1.0 + p);
  const double c = (m - 1.0) / (m * (1.0 + p));
  const double d = p / (1.0 + p);
  for (double tau : {1.5, 3.0, 10.0, 50.0, 400.0, 2000.0}) {
    const auto deriv = [&](double t) {
      const double h = t * 1e-5;
      const auto [k1, y1] = degree_trajectory(m, p, t + h);
      const auto [k0, y0] = degree_trajectory(m, p, t - h);
      const auto [k2, y2] = degree_trajectory(m, p, t + h / 2.0);
      const auto [k3, y3] = degree_trajectory(m, p, t - h / 2.0);
      const double dk_h = (k1 - k0) / (2.0 * h);
      const double dk_h2 = (k2 - k3) / h;
      const double dy_h = (y1 - y0) / (2.0 * h);
      const double dy_h2 = (y2 - y3) / h;
      return std::pair{(4.0 * dk_h2 - dk_h) / 3.0,
                       (4.0 * dy_h2 - dy_h) / 3.0};
    };
    const auto [k, y] = degree_trajectory(m, p, tau);
    const auto [dk, dy] = deriv(tau);
    const double rhs_k = (a * k + b * y) / tau;
    const double rhs_y = (c * k + d * y) / tau;
    CHECK(std::abs(dk - rhs_k) / std::abs(rhs_k) < 1e-8);
    CHECK(std::abs(dy - rhs_y) / std::abs(rhs_y) < 1e-8);
  }
}

TEST_CASE("trajectory growth exponent matches lambda1") {
  const TheoryConstants c = constants(kM, kP);
  // Log-log regression of k over tau in [1e2, 1e4].
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double tau = 100.0; tau <= 10000.0; tau *= 1.2) {
    const auto [k, y] = degree_trajectory(kM, kP, tau);
    const double x = std::log(tau);
    const double yy = std::log(k);
    sx += x;
    sy += yy;
    sxx += x * x;
    sxy += x * yy;
    ++n;
  }
  const double slope = (sxy - sx * sy / n) / (sxx - sx * sx / n);
  CHECK(std::abs(slope - c.lambda1) < 1e-3);
}

TEST_CASE("trajectory ratio converges to the leading eigenvector at p = 0") {
  const auto [k3, y3] = degree_trajectory(2.0, 0.0, 1e3);
  const auto [k4, y4] = degree_trajectory(2.0, 0.0, 1e5);
  CHECK(k3 / y3 == doctest::Approx(k4 / y4).epsilon(1e-3));
}

TEST_CASE("expected_max_degrees endpoints and growth") {
  const auto [k1, y1] = expected_max_degrees(kM, kP, 1.0);
  CHECK(k1 == doctest::Approx(kP).epsilon(1e-14));
  CHECK(y1 == doctest::Approx(1.0).epsilon(1e-14));

  double prev_k = k1, prev_y = y1;
  for (double t : {2.0, 10.0, 100.0, 5000.0, 15000.0}) {
    const auto [k, y] = expected_max_degrees(kM, kP, t);
    CHECK(k >= prev_k);
    CHECK(y >= prev_y);
    prev_k = k;
    prev_y = y;
  }
}

TEST_CASE("expected_max_degrees regression values at the headline point") {
  const auto [k, y] = expected_max_degrees(kM, kP, 15000.0);
  CHECK(k == doctest::Approx(793.1470077295255).epsilon(1e-9));
  CHECK(y == doctest::Approx(588.5820973268934).epsilon(1e-9));
  const auto [rk, ry] = oracles::integrate_trajectory(kM, kP, 15000.0);
  CHECK(k == doctest::Approx(rk).epsilon(1e-7));
  CHECK(y == doctest::Approx(ry).epsilon(1e-7));
}

TEST_CASE("leaf_fraction formula and shape") {
  CHECK(leaf_fraction(0.07) ==
        doctest::Approx(0.4807246376811595).epsilon(1e-12));
  CHECK(leaf_fraction(0.0) == 0.5);
  CHECK(leaf_fraction(1.0) == 0.0);
  CHECK(leaf_fraction(1e-9) == doctest::Approx(0.5).epsilon(1e-8));
  double prev = leaf_fraction(0.0);
  for (double p = 0.05; p <= 1.0; p += 0.05) {
    const double f = leaf_fraction(p);
    CHECK(f < prev);
    prev = f;
  }
  CHECK_THROWS_AS(leaf_fraction(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(leaf_fraction(1.01), std::invalid_argument);
}

TEST_CASE("region_degree_sums splits the global total by weight") {
  const auto single = region_degree_sums(kM, kP, 15000.0, {1.0});
  REQUIRE(single.size() == 1);
  CHECK(single[0].first ==
        doctest::Approx((1.0 + kP) * kM * 15000.0).epsilon(1e-12));
  CHECK(single[0].first == single[0].second);

  const auto split = region_degree_sums(kM, kP, 15000.0, {0.5545, 0.4455});
  CHECK(split[0].first == doctest::Approx(18778.42).epsilon(1e-4));
  CHECK(split[0].first == split[0].second);

  const auto with_zero = region_degree_sums(2.0, 0.0, 100.0, {1.0, 0.0});
  CHECK(with_zero[1].first == 0.0);
  CHECK(with_zero[1].second == 0.0);

  CHECK_THROWS_AS(region_degree_sums(kM, kP, 100.0, {0.5, 0.25}),
                  std::invalid_argument);
}

TEST_CASE("predict bundles the closed forms consistently") {
  const Prediction pred = predict(kM, kP, 15000.0);
  const TheoryConstants c = constants(kM, kP);
  CHECK(pred.gamma == 1.0 + 1.0 / c.lambda1);
  CHECK(pred.eta == pred.gamma - 1.0);
  CHECK(pred.leaf_fraction == leaf_fraction(kP));
  const auto [k, y] = expected_max_degrees(kM, kP, 15000.0);
  CHECK(pred.max_in_degree == k);
  CHECK(pred.max_out_degree == y);

  const Prediction at_origin = predict(kM, kP, 1.0);
  CHECK(at_origin.max_in_degree == doctest::Approx(kP));
  CHECK(at_origin.max_out_degree == doctest::Approx(1.0));
}

}  // namespace
}  // namespace astopo
