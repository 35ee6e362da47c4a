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

#include "specrad/balancing.hpp"

#include <algorithm>
#include <cmath>

namespace specrad {

double line_sum_residual(const Matrix& m) {
  const std::vector<double> rows = row_sums(m);
  const std::vector<double> cols = column_sums(m);
  double worst = 0.0;
  for (size_t i = 0; i < rows.size(); ++i) {
    worst = std::max(worst, std::abs(rows[i] - cols[i]));
  }
  return worst;
}

namespace {

double total_scaled_sum(const Matrix& m, const std::vector<double>& z) {
  const int n = m.dim();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      total += i == j ? m(i, i) : z[i] * m(i, j) / z[j];
    }
  }
  return total;
}

double scaled_line_residual(const Matrix& m, const std::vector<double>& z) {
  const int n = m.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double out = 0.0;
    double in = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      out += z[i] * m(i, j) / z[j];
      in += z[j] * m(j, i) / z[i];
    }
    worst = std::max(worst, std::abs(out - in));
  }
  return worst;
}

}  // namespace

BalanceResult balance(const Matrix& m, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::InvalidArgument, "balance: tol must be positive");
  }
  const MatrixClass c = classify(m);
  if (!c.nonnegative) {
    throw Error(ErrorCode::NotNonnegative, "balance: negative entries");
  }
  if (!c.irreducible) {
    throw Error(ErrorCode::NotIrreducible,
                "balance: support is not irreducible");
  }

  const int n = m.dim();
  std::vector<double> z(static_cast<size_t>(n), 1.0);

  const int digits =
      std::max(1, static_cast<int>(std::ceil(std::log10(1.0 / tol))));
  const int max_sweeps = 100 + 60 * digits;

  int sweeps = 0;
  bool converged = false;
  double residual = 0.0;
  for (; sweeps <= max_sweeps; ++sweeps) {
    residual = scaled_line_residual(m, z);
    if (residual <= tol * (1.0 + total_scaled_sum(m, z))) {
      converged = true;
      break;
    }
    // Cyclic sweep.  Each step multiplies row i by s and divides column i
    // by s; s = sqrt(in/out) equalizes the off-diagonal flows at i and is
    // the exact minimizer of the total sum in that coordinate.
    for (int i = 0; i < n; ++i) {
      double out = 0.0;
      double in = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        out += z[i] * m(i, j) / z[j];
        in += z[j] * m(j, i) / z[i];
      }
      z[i] *= std::sqrt(in / out);
    }
    // Rescaling the whole vector leaves D_z M D_z^{-1} untouched; pinning
    // z[0] keeps the magnitudes tame over long runs.
    const double z0 = z[0];
    for (double& zi : z) zi /= z0;
  }

  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "balance: residual " + std::to_string(residual) +
                    " above tolerance after " + std::to_string(max_sweeps) +
                    " sweeps");
  }

  const double z0 = z[0];
  for (double& zi : z) zi /= z0;

  PositiveVector scaling(z);
  Matrix balanced = apply_diag_similarity(m, scaling);
  double objective = 0.0;
  for (double v : balanced.entries()) objective += v;
  const double final_residual = line_sum_residual(balanced);

  return BalanceResult{std::move(scaling), std::move(balanced), final_residual,
                       objective, sweeps};
}

Matrix symmetrizer(const Matrix& a, const PerronPair& pp) {
  if (a.dim() != pp.right.size() || a.dim() != pp.left.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "symmetrizer: matrix and Perron pair dimensions differ");
  }
  const PositiveVector y =
      elementwise_sqrt(elementwise_divide(pp.left, pp.right));
  return apply_diag_similarity(a, y);
}

}  // namespace specrad
