// Copyright 2026 The Specrad Authors
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

#pragma once

#include "specrad/balancing.hpp"
#include "specrad/matrix.hpp"
#include "specrad/perron.hpp"

namespace specrad {

// Probability weights: nonnegative entries summing to 1 (within 1e-9 at
// construction).
class SimplexVector {
 public:
  explicit SimplexVector(std::vector<double> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[static_cast<size_t>(i)]; }
  const std::vector<double>& values() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// Witness that the sup-inf of the scaled Rayleigh quotient attains the
// spectral radius.  The enclosed interval is recomputable: its bounds are
// the Collatz-Wielandt ratios of A at witness = x_hat / y_hat, and
// cw_interval.lo <= r_estimate <= cw_interval.hi holds by construction.
struct SaddleCertificate {
  double r_estimate;
  PositiveVector x_hat;
  PositiveVector y_hat;
  double objective_at_saddle;  // scaled Rayleigh quotient at (x_hat, y_hat)
  double inner_gap;            // objective_at_saddle - phi(x_hat)
  BoundInterval cw_interval;
  double tolerance;  // tolerance the certificate was produced under
  int iterations;
};

// Thrown by saddle_iterative when no start certifies within budget; carries
// the best certificate seen so the caller can still inspect it.
class SaddleConvergenceError : public Error {
 public:
  SaddleConvergenceError(const std::string& what, SaddleCertificate best)
      : Error(ErrorCode::NoConvergence, what), best_(std::move(best)) {}

  const SaddleCertificate& best() const { return best_; }

 private:
  SaddleCertificate best_;
};

// sum_i p_i [Ax]_i / x_i.
double dvf_objective(const Matrix& a, const SimplexVector& p,
                     const PositiveVector& x);

// y'Ax / y'x.
double fiedler_objective(const Matrix& a, const PositiveVector& x,
                         const PositiveVector& y);

// x' D_y A D_y^{-1} x / x'x, i.e. sum_ij x_i y_i A_ij x_j / y_j over x'x.
double scaled_rayleigh(const Matrix& a, const PositiveVector& x,
                       const PositiveVector& y);

// phi(x) = inf_y of the scaled Rayleigh quotient at fixed x, with its
// minimizer.  Computed exactly by balancing M = D_x A D_x: the infimum over
// y of y'My^{-1} is attained where D_y M D_y^{-1} is line-sum symmetric.
struct InnerSolution {
  double phi;
  PositiveVector minimizer;
  int iterations;
};

InnerSolution inner_infimum(const Matrix& a, const PositiveVector& x,
                            double tol = 1e-12);

// Closed-form saddle from the Perron vectors: x_hat = sqrt(u o v),
// y_hat = sqrt(u / v); the objective there equals u'Av = r(A).
SaddleCertificate saddle_direct(const Matrix& a, double tol = 1e-10);

// Solves the sup-inf without any eigenvector information: gradient ascent
// on phi in logarithmic coordinates (central differences, Armijo
// backtracking, three starts).  Success requires the self-certifying gap
//   max_i [D_y A D_y^{-1} x]_i / x_i  -  phi(x)
// to close below the tolerance, so a returned estimate is never silently
// wrong; otherwise throws SaddleConvergenceError with the best certificate.
SaddleCertificate saddle_iterative(const Matrix& a, double tol = 1e-8);

// Change of variables mapping the two-vector objective onto simplex
// weights: p = (x o y) / sum(x o y); dvf_objective(A, p, x) then equals
// fiedler_objective(A, x, y) for every nonnegative A.
std::pair<SimplexVector, PositiveVector> fiedler_to_dvf(
    const PositiveVector& x, const PositiveVector& y);

// Largest real part among eigenvalues of an irreducible Metzler matrix,
// via the shift B = A - min_i(A_ii) I >= 0 and r(B) from the saddle.
double spectral_bound(const Matrix& a, double tol = 1e-10);

}  // namespace specrad
