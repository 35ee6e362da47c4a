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

#include <cstdint>
#include <optional>
#include <utility>

#include "specrad/matrix.hpp"

namespace specrad {

// Independent ground truth for cross-validation.  Deliberately reimplements
// its own iteration on top of matrix_core only, so a bug in the main solver
// stack cannot validate itself.

// Certified enclosure: lo and hi are intersections of Collatz-Wielandt
// ratio intervals over shifted power iterates, so the final witness's
// ratios always contain [lo, hi].
struct OracleBracket {
  double lo;
  double hi;
  PositiveVector witness;
};

OracleBracket oracle_bracket(const Matrix& a, double eps = 1e-10);

// Midpoint of the bracket; closed form for n <= 2, certified bisection on
// the bracket otherwise.
double oracle_spectral_radius(const Matrix& a, double eps = 1e-10);

// Seeded generator of irreducible nonnegative (or Metzler) test matrices.
// A Hamiltonian cycle of positive weights is always planted, so the result
// is irreducible by construction; `density` controls how many of the
// remaining off-diagonal slots are filled.  Entries are drawn with
// SplitMix64 substreams in a fixed order, so instances are bit-identical
// for a given spec on every platform.
struct InstanceSpec {
  int n = 2;
  double density = 0.5;     // in [0, 1]
  double entry_lo = 0.1;    // > 0
  double entry_hi = 10.0;   // >= entry_lo
  uint64_t seed = 0;
  std::optional<std::pair<double, double>> metzler_diag_range;
};

Matrix gen_instance(const InstanceSpec& spec);

}  // namespace specrad
