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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "specrad/matrix.hpp"
#include "specrad/oracle.hpp"
#include "specrad/rng.hpp"

namespace spectest {

inline specrad::PositiveVector random_positive(specrad::SplitMix64& rng, int n,
                                               double lo = 0.1,
                                               double hi = 10.0) {
  std::vector<double> v(static_cast<size_t>(n));
  for (double& x : v) x = rng.uniform(lo, hi);
  return specrad::PositiveVector(std::move(v));
}

// Instance pool for property tests: dimension and density drawn from the
// seed, entries in [0.1, 10].
inline specrad::InstanceSpec random_spec(specrad::SplitMix64& rng,
                                         int n_min = 2, int n_max = 8) {
  specrad::InstanceSpec spec;
  spec.n = n_min + static_cast<int>(rng.next_below(
                       static_cast<uint64_t>(n_max - n_min) + 1));
  spec.density = rng.uniform(0.0, 0.9);
  spec.entry_lo = 0.1;
  spec.entry_hi = 10.0;
  spec.seed = rng.next();
  return spec;
}

// Symmetric irreducible instance: (G + G^T) / 2 keeps the planted cycle.
inline specrad::Matrix random_symmetric(specrad::SplitMix64& rng, int n_min = 2,
                                        int n_max = 6) {
  const specrad::Matrix g = gen_instance(random_spec(rng, n_min, n_max));
  specrad::Matrix s(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) {
      s.set(i, j, 0.5 * (g(i, j) + g(j, i)));
    }
  }
  return s;
}

template <typename Fn>
specrad::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const specrad::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return specrad::ErrorCode::InvalidArgument;
}

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace spectest
