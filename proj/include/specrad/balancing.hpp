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
#include "specrad/perron.hpp"

namespace specrad {

struct BalanceResult {
  PositiveVector scaling;  // z, normalized so z[0] == 1
  Matrix balanced;         // D_z M D_z^{-1}
  double residual;         // inf-norm of (row sums - column sums) of balanced
  double objective;        // sum of all balanced entries, == z' M z^{-1}
  int iterations;          // full coordinate sweeps performed
};

// ||Me - M'e||_inf: how far M is from line-sum symmetry.
double line_sum_residual(const Matrix& m);

// Finds z > 0 such that D_z M D_z^{-1} is line-sum symmetric, by cyclic
// coordinate minimization of the total entry sum z' M z^{-1}: each update
// z_i <- z_i * sqrt(in_i / out_i) is the exact one-variable minimizer (the
// diagonal entry is similarity-invariant and excluded from the flows).
// Stationarity of all updates is exactly row sums == column sums, which
// characterizes the global minimizer of the sum.
//
// Requires M nonnegative with irreducible support (otherwise some in/out
// flow could vanish and the scheme diverges).  Stops once
// residual <= tol * (1 + objective); throws NoConvergence past the sweep
// budget.
BalanceResult balance(const Matrix& m, double tol = 1e-12);

// D_y A D_y^{-1} with y = sqrt(u/v) elementwise.  The result has coinciding
// left and right Perron vectors sqrt(u o v) and the same Perron root, i.e.
// it is the similarity scaling of A closest to a symmetric matrix.
Matrix symmetrizer(const Matrix& a, const PerronPair& pp);

}  // namespace specrad
