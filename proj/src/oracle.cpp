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

#include "specrad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specrad/rng.hpp"

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

// Ratio interval of A at a positive iterate; contains r(A) for every
// positive vector.  Local duplicate of the Collatz-Wielandt computation so
// this module stays independent of the solver stack.
std::pair<double, double> ratio_interval(const Matrix& a,
                                         const std::vector<double>& x) {
  const std::vector<double> ax = matvec(a, x);
  double lo = ax[0] / x[0];
  double hi = lo;
  for (size_t i = 1; i < x.size(); ++i) {
    const double ratio = ax[i] / x[i];
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo, hi};
}

}  // namespace

OracleBracket oracle_bracket(const Matrix& a, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::InvalidArgument, "oracle_bracket: eps must be > 0");
  }
  require_nonnegative_irreducible(a, "oracle_bracket");
  const int n = a.dim();

  if (n == 1) {
    const double r = a(0, 0);
    return OracleBracket{r, r, PositiveVector::ones(1)};
  }
  if (n == 2) {
    // Larger root of lambda^2 - tr lambda + det = 0; the cross term
    // a(0,1)*a(1,0) is nonnegative, so the discriminant cannot go negative.
    const double tr = a(0, 0) + a(1, 1);
    const double diff = a(0, 0) - a(1, 1);
    const double r =
        0.5 * (tr + std::sqrt(diff * diff + 4.0 * a(0, 1) * a(1, 0)));
    return OracleBracket{r, r, PositiveVector::ones(2)};
  }

  // Bisection on lambda, with each comparison decided by a certified ratio
  // interval at a shifted power iterate.  The running intersection of those
  // intervals never loses r, so [lo, hi] is a valid bracket at all times.
  const double shift = 1.0 + inf_norm(a);
  std::vector<double> x(static_cast<size_t>(n), 1.0);
  auto [lo, hi] = ratio_interval(a, x);

  const long max_steps = 500000;
  long steps = 0;
  while (hi - lo > eps) {
    const double mid = 0.5 * (lo + hi);
    bool resolved = false;
    while (steps < max_steps) {
      ++steps;
      std::vector<double> next = matvec(a, x);
      for (int i = 0; i < n; ++i) next[i] += shift * x[i];
      double top = 0.0;
      for (double v : next) top = std::max(top, v);
      for (double& v : next) v /= top;
      x = std::move(next);

      const auto [rlo, rhi] = ratio_interval(a, x);
      lo = std::max(lo, rlo);
      hi = std::min(hi, rhi);
      if (lo >= mid || hi <= mid || hi - lo <= eps) {
        resolved = true;
        break;
      }
    }
    if (!resolved) {
      throw Error(ErrorCode::NoConvergence,
                  "oracle_bracket: bracket width " + std::to_string(hi - lo) +
                      " above eps after " + std::to_string(max_steps) +
                      " iterations");
    }
  }
  return OracleBracket{lo, hi, PositiveVector(std::move(x))};
}

double oracle_spectral_radius(const Matrix& a, double eps) {
  const OracleBracket bracket = oracle_bracket(a, eps);
  return 0.5 * (bracket.lo + bracket.hi);
}

Matrix gen_instance(const InstanceSpec& spec) {
  if (spec.n < 1) {
    throw Error(ErrorCode::InvalidArgument, "gen_instance: n must be >= 1");
  }
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "gen_instance: density must lie in [0, 1]");
  }
  if (!(spec.entry_lo > 0.0) || !(spec.entry_hi >= spec.entry_lo) ||
      !std::isfinite(spec.entry_hi)) {
    throw Error(ErrorCode::InvalidArgument,
                "gen_instance: entry range must satisfy 0 < lo <= hi");
  }
  if (spec.metzler_diag_range) {
    const auto& [dlo, dhi] = *spec.metzler_diag_range;
    if (!(dlo <= dhi) || !std::isfinite(dlo) || !std::isfinite(dhi)) {
      throw Error(ErrorCode::InvalidArgument,
                  "gen_instance: diagonal range must satisfy lo <= hi");
    }
  }

  const int n = spec.n;
  const SplitMix64 root(spec.seed);
  // One substream per phase, in a fixed documented order; adding draws to
  // one phase never perturbs another.
  SplitMix64 perm_rng = root.split(1);
  SplitMix64 cycle_rng = root.split(2);
  SplitMix64 mask_rng = root.split(3);
  SplitMix64 fill_rng = root.split(4);
  SplitMix64 diag_rng = root.split(5);

  Matrix m(n);
  if (n == 1) {
    m.set(0, 0, spec.metzler_diag_range
                    ? diag_rng.uniform(spec.metzler_diag_range->first,
                                       spec.metzler_diag_range->second)
                    : cycle_rng.uniform(spec.entry_lo, spec.entry_hi));
    return m;
  }

  // Plant a Hamiltonian cycle through a Fisher-Yates shuffle.
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i >= 1; --i) {
    const int j = static_cast<int>(
        perm_rng.next_below(static_cast<uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  for (int k = 0; k < n; ++k) {
    m.set(order[k], order[(k + 1) % n],
          cycle_rng.uniform(spec.entry_lo, spec.entry_hi));
  }

  // Sprinkle the remaining off-diagonal slots in row-major order.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || m(i, j) != 0.0) continue;
      if (mask_rng.next_double() < spec.density) {
        m.set(i, j, fill_rng.uniform(spec.entry_lo, spec.entry_hi));
      }
    }
  }

  if (spec.metzler_diag_range) {
    for (int i = 0; i < n; ++i) {
      m.set(i, i, diag_rng.uniform(spec.metzler_diag_range->first,
                                   spec.metzler_diag_range->second));
    }
  }
  return m;
}

}  // namespace specrad
