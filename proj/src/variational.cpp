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

#include "specrad/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

namespace specrad {

namespace {

void require_same_dim(int a, int b, const char* op) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": dimensions " + std::to_string(a) +
                    " and " + std::to_string(b) + " differ");
  }
}

void require_positive_tol(double tol, const char* op) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(op) + ": tolerance must be positive");
  }
}

}  // namespace

SimplexVector::SimplexVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "SimplexVector: empty");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "SimplexVector: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidArgument,
                "SimplexVector: weights sum to " + std::to_string(sum) +
                    ", off the simplex");
  }
}

double dvf_objective(const Matrix& a, const SimplexVector& p,
                     const PositiveVector& x) {
  require_same_dim(a.dim(), p.size(), "dvf_objective");
  require_same_dim(a.dim(), x.size(), "dvf_objective");
  const std::vector<double> ax = matvec(a, x.values());
  double acc = 0.0;
  for (int i = 0; i < a.dim(); ++i) acc += p[i] * ax[i] / x[i];
  return acc;
}

double fiedler_objective(const Matrix& a, const PositiveVector& x,
                         const PositiveVector& y) {
  require_same_dim(a.dim(), x.size(), "fiedler_objective");
  require_same_dim(a.dim(), y.size(), "fiedler_objective");
  const std::vector<double> ax = matvec(a, x.values());
  return dot(y.values(), ax) / dot(y.values(), x.values());
}

double scaled_rayleigh(const Matrix& a, const PositiveVector& x,
                       const PositiveVector& y) {
  require_same_dim(a.dim(), x.size(), "scaled_rayleigh");
  require_same_dim(a.dim(), y.size(), "scaled_rayleigh");
  const int n = a.dim();
  double num = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      num += x[i] * y[i] * a(i, j) * x[j] / y[j];
    }
  }
  return num / dot(x.values(), x.values());
}

InnerSolution inner_infimum(const Matrix& a, const PositiveVector& x,
                            double tol) {
  require_same_dim(a.dim(), x.size(), "inner_infimum");
  require_positive_tol(tol, "inner_infimum");
  const int n = a.dim();

  // M = D_x A D_x; minimizing y'My^{-1} over y is balancing M.
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, x[i] * a(i, j) * x[j]);
  }
  BalanceResult bal = balance(m, tol);
  const double phi = bal.objective / dot(x.values(), x.values());
  return InnerSolution{phi, std::move(bal.scaling), bal.iterations};
}

SaddleCertificate saddle_direct(const Matrix& a, double tol) {
  require_positive_tol(tol, "saddle_direct");
  const double perron_tol = std::max(1e-13, std::min(1e-12, tol * 1e-2));
  const PerronPair pp = perron_pair(a, perron_tol);

  PositiveVector x_hat = elementwise_sqrt(hadamard(pp.left, pp.right));
  PositiveVector y_hat =
      elementwise_sqrt(elementwise_divide(pp.left, pp.right));

  const double objective = scaled_rayleigh(a, x_hat, y_hat);
  const InnerSolution inner =
      inner_infimum(a, x_hat, std::max(1e-14, std::min(1e-13, tol * 1e-3)));
  const double inner_gap = objective - inner.phi;

  PositiveVector witness = elementwise_divide(x_hat, y_hat);
  const auto [lo, hi] = cw_ratios(a, witness);

  return SaddleCertificate{objective,
                           std::move(x_hat),
                           std::move(y_hat),
                           objective,
                           inner_gap,
                           BoundInterval{lo, hi, std::move(witness)},
                           tol,
                           inner.iterations};
}

namespace {

// State of the outer solver at one test point.
struct SaddleProbe {
  double phi;
  PositiveVector inner_minimizer;
  double cw_lo, cw_hi;  // ratios of A at x / y, == ratios of the scaled
                        // matrix D_y A D_y^{-1} at x
  double gap_rel;
};

constexpr double kBalanceTolIterative = 1e-13;

SaddleProbe probe_saddle(const Matrix& a, const PositiveVector& x) {
  InnerSolution inner = inner_infimum(a, x, kBalanceTolIterative);
  PositiveVector witness = elementwise_divide(x, inner.minimizer);
  const auto [lo, hi] = cw_ratios(a, witness);
  // phi <= r <= hi always, so hi - phi bounds the error of phi as an
  // estimate of r; this is what makes the iterative path self-certifying.
  const double gap_rel = (hi - inner.phi) / std::max(1.0, std::abs(inner.phi));
  return SaddleProbe{inner.phi, std::move(inner.minimizer), lo, hi, gap_rel};
}

PositiveVector exp_normalized(const std::vector<double>& log_x) {
  const double top = *std::max_element(log_x.begin(), log_x.end());
  std::vector<double> x(log_x.size());
  for (size_t i = 0; i < log_x.size(); ++i) x[i] = std::exp(log_x[i] - top);
  const double norm = std::sqrt(dot(x, x));
  for (double& v : x) v /= norm;
  return PositiveVector(std::move(x));
}

double phi_at(const Matrix& a, const std::vector<double>& log_x) {
  return inner_infimum(a, exp_normalized(log_x), kBalanceTolIterative).phi;
}

struct AscentOutcome {
  SaddleProbe probe;
  PositiveVector x;
  int iterations;
  bool certified;
};

// Gradient ascent on phi in log coordinates.  phi is differentiable (the
// inner minimizer is unique up to scale), scale-invariant along e, and
// bounded above by r, so the ascent either certifies via the ratio gap or
// stalls at the finite-difference noise floor.
AscentOutcome ascend(const Matrix& a, const PositiveVector& x0, double tol,
                     int max_outer) {
  const int n = a.dim();
  std::vector<double> log_x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) log_x[i] = std::log(x0[i]);

  PositiveVector x = exp_normalized(log_x);
  SaddleProbe probe = probe_saddle(a, x);
  PositiveVector best_x = x;
  SaddleProbe best = probe;

  const double fd_step = 1e-6;
  const double armijo = 1e-4;
  double step = 1.0;

  int iter = 0;
  for (; iter < max_outer; ++iter) {
    if (probe.gap_rel <= tol) {
      return AscentOutcome{std::move(probe), std::move(x), iter, true};
    }

    std::vector<double> grad(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      log_x[k] += fd_step;
      const double up = phi_at(a, log_x);
      log_x[k] -= 2.0 * fd_step;
      const double down = phi_at(a, log_x);
      log_x[k] += fd_step;
      grad[k] = (up - down) / (2.0 * fd_step);
    }

    const double scale = std::max(1.0, std::abs(probe.phi));
    if (inf_norm(grad) <= 1e-11 * scale) break;  // noise floor

    const double grad_sq = dot(grad, grad);
    double alpha = step;
    bool accepted = false;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      std::vector<double> trial = log_x;
      for (int k = 0; k < n; ++k) trial[k] += alpha * grad[k];
      const double value = phi_at(a, trial);
      if (value >= probe.phi + armijo * alpha * grad_sq) {
        log_x = std::move(trial);
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;  // stalled below step tolerance

    step = std::clamp(alpha * 2.0, 1e-8, 1e4);
    x = exp_normalized(log_x);
    probe = probe_saddle(a, x);
    if (probe.phi > best.phi) {
      best = probe;
      best_x = x;
    }
  }

  const bool certified = best.gap_rel <= tol;
  return AscentOutcome{std::move(best), std::move(best_x), iter, certified};
}

SaddleCertificate make_certificate(const Matrix& a, AscentOutcome&& out,
                                   double tol, int total_iterations) {
  const double objective = scaled_rayleigh(a, out.x, out.probe.inner_minimizer);
  PositiveVector witness =
      elementwise_divide(out.x, out.probe.inner_minimizer);
  return SaddleCertificate{
      out.probe.phi,
      std::move(out.x),
      std::move(out.probe.inner_minimizer),
      objective,
      objective - out.probe.phi,
      BoundInterval{out.probe.cw_lo, out.probe.cw_hi, std::move(witness)},
      tol,
      total_iterations};
}

}  // namespace

SaddleCertificate saddle_iterative(const Matrix& a, double tol) {
  require_positive_tol(tol, "saddle_iterative");
  const MatrixClass c = classify(a);
  if (!c.nonnegative) {
    throw Error(ErrorCode::NotNonnegative,
                "saddle_iterative: matrix has negative entries");
  }
  if (!c.irreducible) {
    throw Error(ErrorCode::NotIrreducible,
                "saddle_iterative: support graph is not strongly connected");
  }

  const int n = a.dim();
  std::vector<PositiveVector> starts;
  starts.push_back(PositiveVector::ones(n));
  if (n > 1) {
    const std::vector<double> rows = row_sums(a);
    const std::vector<double> cols = column_sums(a);
    starts.emplace_back(rows);
    std::vector<double> geo(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) geo[i] = std::sqrt(rows[i] * cols[i]);
    starts.emplace_back(std::move(geo));
  }

  const int max_outer = 600;
  int total_iterations = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  double best_phi = -std::numeric_limits<double>::infinity();
  std::optional<SaddleCertificate> best;

  for (const PositiveVector& start : starts) {
    AscentOutcome out = ascend(a, start, tol, max_outer);
    total_iterations += out.iterations;
    const bool certified = out.certified;
    const double phi = out.probe.phi;
    const double gap = out.probe.gap_rel;
    SaddleCertificate cert =
        make_certificate(a, std::move(out), tol, total_iterations);
    if (certified) return cert;
    if (phi > best_phi) {
      best_phi = phi;
      best_gap = gap;
      best = std::move(cert);
    }
  }

  // No start closed the gap to tol; a 10x looser certificate still bounds
  // the error well inside the contract, otherwise fail loudly.
  if (best && best_gap <= 10.0 * tol) return *std::move(best);
  throw SaddleConvergenceError(
      "saddle_iterative: certified gap " + std::to_string(best_gap) +
          " above " + std::to_string(10.0 * tol) + " after all starts",
      *std::move(best));
}

std::pair<SimplexVector, PositiveVector> fiedler_to_dvf(
    const PositiveVector& x, const PositiveVector& y) {
  require_same_dim(x.size(), y.size(), "fiedler_to_dvf");
  std::vector<double> z(static_cast<size_t>(x.size()));
  double total = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    z[i] = x[i] * y[i];
    total += z[i];
  }
  for (double& v : z) v /= total;
  return {SimplexVector(std::move(z)), x};
}

double spectral_bound(const Matrix& a, double tol) {
  require_positive_tol(tol, "spectral_bound");
  const MatrixClass c = classify(a);
  if (!c.metzler) {
    throw Error(ErrorCode::NotMetzler,
                "spectral_bound: negative off-diagonal entries");
  }
  if (!c.irreducible) {
    throw Error(ErrorCode::NotIrreducible,
                "spectral_bound: support graph is not strongly connected");
  }

  double t = a(0, 0);
  for (int i = 1; i < a.dim(); ++i) t = std::min(t, a(i, i));
  const Matrix b = add_diagonal_shift(a, -t);
  return saddle_direct(b, tol).r_estimate + t;
}

}  // namespace specrad
