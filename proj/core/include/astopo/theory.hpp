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

#ifndef ASTOPO_THEORY_HPP_
#define ASTOPO_THEORY_HPP_

#include <utility>
#include <vector>

namespace astopo {

// Closed-form constants of the directed growth process with mean edge count
// m and symmetric probability p.  lambda1 is the leading growth exponent of
// expected degrees; the degree-density power-law exponent is
// gamma = 1 + 1/lambda1.
struct TheoryConstants {
  double m = 0.0;
  double p = 0.0;
  double A = 0.0;        // sqrt(p^2 + 4m(m-1))
  double B = 0.0;        // 2(1+p)m - p^2
  double C = 0.0;        // B / A
  double D = 0.0;        // p / (4m(1+p))
  double G = 0.0;        // D*C + 1/2 + D*A
  double lambda1 = 0.0;  // (p(2m-1) + A) / (2m(1+p))
  double lambda2 = 0.0;  // (p(2m-1) - A) / (2m(1+p))
};

// Model predictions derived from the constants.  Degrees are expectations
// under the mean-field approximation; max degrees refer to the oldest node
// after t growth steps.
struct Prediction {
  double gamma = 0.0;          // 1 + 1/lambda1
  double eta = 0.0;            // gamma - 1 (CCDF slope magnitude)
  double leaf_fraction = 0.0;  // (1+p)(1-p)/(2+p)
  double max_in_degree = 0.0;
  double max_out_degree = 0.0;
};

// Computes all constants.  Requires m > 1 (at m = 1 no internal edges are
// added and the exponents degenerate); throws std::invalid_argument
// otherwise, and for p outside [0, 1].
TheoryConstants constants(double m, double p);

// Expected (in-degree, out-degree) of a node whose age ratio is
// tau = t / t_i >= 1, from the exact solution of the mean-field ODE system
//
//   dk/dt = (1/(1+p)) * y/t + (p(m-1)/(m(1+p))) * k/t
//   dy/dt = (p/(1+p)) * y/t + ((m-1)/(m(1+p)))  * k/t
//
// with initial conditions (k, y) = (p, 1) at tau = 1, via eigendecomposition
// of the coefficient matrix.  Throws std::invalid_argument for tau < 1.
std::pair<double, double> degree_trajectory(double m, double p, double tau);

// degree_trajectory evaluated for the oldest node (t_i = 1) at time t:
// the expected maximal in- and out-degree in a t-node graph.
std::pair<double, double> expected_max_degrees(double m, double p, double t);

// Expected fraction of leaves (in-degree 0, out-degree 1) in a large graph:
// (1+p)(1-p)/(2+p).  Requires p in [0, 1].
double leaf_fraction(double p);

// Expected per-region sums of in-degrees (== sums of out-degrees) after t
// steps: element j is weights[j] * (1+p) * m * t.  Weights must be
// normalized (sum to 1).
std::vector<std::pair<double, double>> region_degree_sums(
    double m, double p, double t, const std::vector<double>& weights);

// Bundles the scalar predictions; max degrees evaluated at horizon t
// (pass t = 1 when no horizon is of interest: the result is (p, 1)).
Prediction predict(double m, double p, double t);

}  // namespace astopo

#endif  // ASTOPO_THEORY_HPP_
