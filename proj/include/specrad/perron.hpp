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

#include "specrad/matrix.hpp"

namespace specrad {

// Perron root r with left vector u and right vector v of a nonnegative
// irreducible matrix: u'A = r u', A v = r v, u, v > 0 and u'v = 1.
// `right` is scaled to unit Euclidean norm; `left` then absorbs the
// normalization.  `residual` is
//   max(||Av - r v||_inf / ||v||_inf, ||A'u - r u||_inf / ||u||_inf).
struct PerronPair {
  double root;
  PositiveVector left;
  PositiveVector right;
  double residual;
};

// Certified enclosure lo <= r(A) <= hi, recomputable from the witness:
// lo = min_i [A x]_i / x_i and hi = max_i of the same ratios.  The bounds
// hold for every positive x, so the certificate is independent of how the
// witness was produced.
struct BoundInterval {
  double lo;
  double hi;
  PositiveVector witness;
};

// Collatz-Wielandt ratios of A at x: (min_i [Ax]_i/x_i, max_i [Ax]_i/x_i).
std::pair<double, double> cw_ratios(const Matrix& a, const PositiveVector& x);

// Power iteration on A + cI and its transpose, with c = 1 + max_i A(i,i) so
// the shifted matrix is primitive and the iteration converges even for
// cyclic support patterns.  Converges once the residual drops below
// tol * min(1, ||A||_inf); throws NotNonnegative / NotIrreducible /
// NoConvergence.
PerronPair perron_pair(const Matrix& a, double tol = 1e-12);

// Runs the same shifted iteration and returns the first iterate whose ratio
// spread satisfies hi - lo <= eps * max(1, |hi|), together with that iterate
// as the witness.
BoundInterval cw_certified_interval(const Matrix& a, double eps = 1e-10);

}  // namespace specrad
