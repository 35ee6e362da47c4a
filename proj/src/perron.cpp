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

#include "specrad/perron.hpp"

#include <algorithm>
#include <cmath>

namespace specrad {

namespace {

void require_nonnegative_irreducible(const Matrix& a, const char* op) {
  const MatrixClass c = classify(a);
  if (!c.nonnegative) {
    throw Error(ErrorCode::NotNonnegative,
                std::string(op) + ": matrix has negative entries");
  }
  if (!c.irreducible) {
    throw Error(ErrorCode::NotIrreducible,
                std::string(op) + ": support graph is not strongly connected");
  }
}

void require_positive(double value, const char* op, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(op) + ": " + name + " must be positive");
  }
}

int iteration_budget(int n, double tol) {
  const int digits =
      std::max(1, static_cast<int>(std::ceil(std::log10(1.0 / tol))));
  return 100 * n * digits;
}

void normalize_inf(std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  for (double& x : v) x /= m;
}

double max_diagonal(const Matrix& a) {
  double m = a(0, 0);
  for (int i = 1; i < a.dim(); ++i) m = std::max(m, a(i, i));
  return m;
}

}  // namespace

std::pair<double, double> cw_ratios(const Matrix& a, const PositiveVector& x) {
  if (a.dim() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cw_ratios: matrix and vector dimensions differ");
  }
  const std::vector<double> ax = matvec(a, x.values());
  double lo = ax[0] / x[0];
  double hi = lo;
  for (int i = 1; i < a.dim(); ++i) {
    const double ratio = ax[i] / x[i];
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo, hi};
}

PerronPair perron_pair(const Matrix& a, double tol) {
  require_positive(tol, "perron_pair", "tol");
  require_nonnegative_irreducible(a, "perron_pair");

  const int n = a.dim();
  // Shift by 1 + max diagonal: A + cI has a strictly positive diagonal, so
  // it is primitive and the power iteration cannot cycle.
  const double shift = 1.0 + max_diagonal(a);
  const double scale = std::min(1.0, inf_norm(a));

  std::vector<double> v(static_cast<size_t>(n), 1.0);
  std::vector<double> u(static_cast<size_t>(n), 1.0);
  double root = 0.0;
  double residual = 0.0;
  bool converged = false;

  const int budget = iteration_budget(n, tol);
  for (int iter = 0; iter < budget; ++iter) {
    std::vector<double> av = matvec(a, v);
    std::vector<double> atu = matvec_transpose(a, u);

    const double uv = dot(u, v);
    root = dot(u, av) / uv;

    double res_v = 0.0;
    double res_u = 0.0;
    for (int i = 0; i < n; ++i) {
      res_v = std::max(res_v, std::abs(av[i] - root * v[i]));
      res_u = std::max(res_u, std::abs(atu[i] - root * u[i]));
    }
    residual = std::max(res_v / inf_norm(v), res_u / inf_norm(u));
    if (residual <= tol * scale) {
      converged = true;
      break;
    }

    // One shifted power step for both sides, renormalized in the inf-norm.
    for (int i = 0; i < n; ++i) {
      av[i] += shift * v[i];
      atu[i] += shift * u[i];
    }
    v = std::move(av);
    u = std::move(atu);
    normalize_inf(v);
    normalize_inf(u);
  }

  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "perron_pair: residual " + std::to_string(residual) +
                    " above tolerance after " + std::to_string(budget) +
                    " iterations");
  }

  // Fix scales: ||v||_2 = 1, then u' v = 1.
  const double vnorm = std::sqrt(dot(v, v));
  for (double& x : v) x /= vnorm;
  const double uv = dot(u, v);
  for (double& x : u) x /= uv;

  return PerronPair{root, PositiveVector(std::move(u)),
                    PositiveVector(std::move(v)), residual};
}

BoundInterval cw_certified_interval(const Matrix& a, double eps) {
  require_positive(eps, "cw_certified_interval", "eps");
  require_nonnegative_irreducible(a, "cw_certified_interval");

  const int n = a.dim();
  const double shift = 1.0 + max_diagonal(a);

  std::vector<double> x(static_cast<size_t>(n), 1.0);
  const int budget = iteration_budget(n, eps);
  for (int iter = 0; iter <= budget; ++iter) {
    PositiveVector witness(x);
    const auto [lo, hi] = cw_ratios(a, witness);
    if (hi - lo <= eps * std::max(1.0, std::abs(hi))) {
      return BoundInterval{lo, hi, std::move(witness)};
    }
    std::vector<double> next = matvec(a, x);
    for (int i = 0; i < n; ++i) next[i] += shift * x[i];
    x = std::move(next);
    normalize_inf(x);
  }

  throw Error(ErrorCode::NoConvergence,
              "cw_certified_interval: ratio spread above eps after " +
                  std::to_string(budget) + " iterations");
}

}  // namespace specrad
