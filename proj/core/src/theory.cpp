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

namespace astopo {
namespace {

void check_domain(double m, double p) {
  if (!(m > 1.0)) {
    throw std::invalid_argument("theory requires m > 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("theory requires p in [0, 1]");
  }
}

}  // namespace

TheoryConstants constants(double m, double p) {
  check_domain(m, p);
  TheoryConstants k;
  k.m = m;
  k.p = p;
  k.A = std::sqrt(p * p + 4.0 * m * (m - 1.0));
  k.B = 2.0 * (1.0 + p) * m - p * p;
  k.C = k.B / k.A;
  k.D = p / (4.0 * m * (1.0 + p));
  k.G = k.D * k.C + 0.5 + k.D * k.A;
  k.lambda1 = (p * (2.0 * m - 1.0) + k.A) / (2.0 * m * (1.0 + p));
  k.lambda2 = (p * (2.0 * m - 1.0) - k.A) / (2.0 * m * (1.0 + p));
  return k;
}

std::pair<double, double> degree_trajectory(double m, double p, double tau) {
  check_domain(m, p);
  if (!(tau >= 1.0)) {
    throw std::invalid_argument("degree_trajectory requires tau >= 1");
  }

  // In s = ln(tau) the mean-field equations become the constant-coefficient
  // system (k, y)' = M (k, y) with
  //
  //       | p(m-1)/(m(1+p))   1/(1+p)  |
  //   M = |                            |
  //       | (m-1)/(m(1+p))    p/(1+p)  |
  //
  // whose eigenvalues are exactly lambda1 and lambda2.  With eigenvectors
  // (b, lambda - a) the solution through (k, y)(1) = (p, 1) is a sum of two
  // pure powers of tau.
  const TheoryConstants k = constants(m, p);
  const double a = p * (m - 1.0) / (m * (1.0 + p));
  const double b = 1.0 / (1.0 + p);
  const double gap = k.lambda1 - k.lambda2;  // A/(m(1+p)) > 0 whenever m > 1

  const double u1 = (1.0 - (p / b) * (k.lambda2 - a)) / gap;
  const double u2 = p / b - u1;

  const double pow1 = std::pow(tau, k.lambda1);
  const double pow2 = std::pow(tau, k.lambda2);
  const double in_degree = b * (u1 * pow1 + u2 * pow2);
  const double out_degree =
      u1 * (k.lambda1 - a) * pow1 + u2 * (k.lambda2 - a) * pow2;
  return {in_degree, out_degree};
}

std::pair<double, double> expected_max_degrees(double m, double p, double t) {
  // The oldest node has age ratio t / t_i = t.
  return degree_trajectory(m, p, t);
}

double leaf_fraction(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("leaf_fraction requires p in [0, 1]");
  }
  return (1.0 + p) * (1.0 - p) / (2.0 + p);
}

std::vector<std::pair<double, double>> region_degree_sums(
    double m, double p, double t, const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("region_degree_sums requires normalized weights");
  }
  std::vector<std::pair<double, double>> sums;
  sums.reserve(weights.size());
  for (double w : weights) {
    const double s = w * (1.0 + p) * m * t;
    sums.emplace_back(s, s);  // in- and out-degree sums coincide per region
  }
  return sums;
}

Prediction predict(double m, double p, double t) {
  const TheoryConstants k = constants(m, p);
  Prediction out;
  out.gamma = 1.0 + 1.0 / k.lambda1;
  out.eta = out.gamma - 1.0;
  out.leaf_fraction = leaf_fraction(p);
  const auto [in_deg, out_deg] = expected_max_degrees(m, p, t);
  out.max_in_degree = in_deg;
  out.max_out_degree = out_deg;
  return out;
}

}  // namespace astopo
