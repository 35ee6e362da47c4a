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

#include <cmath>

#include <doctest.h>

#include "specrad/balancing.hpp"
#include "specrad/oracle.hpp"
#include "specrad/perron.hpp"
#include "specrad/rng.hpp"
#include "test_support.hpp"

using namespace specrad;
using spectest::code_of;
using spectest::random_positive;
using spectest::random_spec;

namespace {

double probe_objective(const Matrix& m, const PositiveVector& z) {
  double total = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) total += z[i] * m(i, j) / z[j];
  }
  return total;
}

double entry_sum(const Matrix& m) {
  double total = 0.0;
  for (double v : m.entries()) total += v;
  return total;
}

}  // namespace

TEST_SUITE("balancing") {

TEST_CASE("line_sum_residual examples") {
  CHECK(line_sum_residual(Matrix(2, {0, 4, 4, 0})) == 0.0);
  CHECK(line_sum_residual(Matrix(2, {0, 2, 8, 0})) == 6.0);
  CHECK(line_sum_residual(Matrix(1, {5})) == 0.0);
}

TEST_CASE("balance 2x2 cycle") {
  const BalanceResult r = balance(Matrix(2, {0, 2, 8, 0}));
  // z proportional to (2, 1), pinned at z[0] = 1.
  CHECK(r.scaling[0] == 1.0);
  CHECK(std::abs(r.scaling[1] - 0.5) <= 1e-9);
  CHECK(std::abs(r.balanced(0, 1) - 4.0) <= 1e-9);
  CHECK(std::abs(r.balanced(1, 0) - 4.0) <= 1e-9);
  CHECK(std::abs(r.objective - 8.0) <= 1e-9);
  CHECK(r.residual <= 1e-12 * (1.0 + r.objective));
}

TEST_CASE("balance leaves balanced input alone") {
  const BalanceResult sym = balance(Matrix(2, {0, 4, 4, 0}));
  CHECK(sym.iterations == 0);
  CHECK(sym.scaling[0] == 1.0);
  CHECK(sym.scaling[1] == 1.0);

  const BalanceResult ones = balance(Matrix(2, {1, 1, 1, 1}));
  CHECK(ones.iterations == 0);
  CHECK(ones.objective == 4.0);

  const BalanceResult single = balance(Matrix(1, {5}));
  CHECK(single.objective == 5.0);
  CHECK(single.residual == 0.0);
}

TEST_CASE("balance rejects bad inputs") {
  CHECK(code_of([] { balance(Matrix(2, {1, 0, 0, 1})); }) ==
        ErrorCode::NotIrreducible);
  CHECK(code_of([] { balance(Matrix(2, {0, -2, 8, 0})); }) ==
        ErrorCode::NotNonnegative);
  CHECK(code_of([] { balance(Matrix(2, {0, 2, 8, 0}), 0.0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("balanced scaling minimizes the total sum") {
  SplitMix64 rng(303);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = gen_instance(random_spec(rng));
    const BalanceResult r = balance(m);

    CHECK(r.objective <= entry_sum(m) + 1e-12 * (1.0 + entry_sum(m)));
    CHECK(r.residual <= 1e-12 * (1.0 + r.objective));

    for (int probe = 0; probe < 100; ++probe) {
      const PositiveVector z = random_positive(rng, m.dim(), 0.2, 5.0);
      CHECK(probe_objective(r.balanced, z) >= r.objective - 1e-9);
    }
  }
}

TEST_CASE("scaling by the Perron vectors is already optimal") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = gen_instance(random_spec(rng));
    const PerronPair pp = perron_pair(a, 1e-13);

    Matrix m(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
      for (int j = 0; j < a.dim(); ++j) {
        m.set(i, j, pp.left[i] * a(i, j) * pp.right[j]);
      }
    }
    const BalanceResult r = balance(m);
    for (int i = 0; i < a.dim(); ++i) {
      CHECK(std::abs(r.scaling[i] - 1.0) <= 1e-8);
    }
    const double root = oracle_spectral_radius(a, 1e-11);
    CHECK(std::abs(r.objective - root) <= 1e-9 * std::max(1.0, root));
  }
}

TEST_CASE("symmetrizer examples") {
  const Matrix a(2, {0, 2, 8, 0});
  const Matrix sym = symmetrizer(a, perron_pair(a));
  CHECK(std::abs(sym(0, 1) - 4.0) <= 1e-9);
  CHECK(std::abs(sym(1, 0) - 4.0) <= 1e-9);
  CHECK(sym(0, 0) == 0.0);

  const Matrix single(1, {3});
  CHECK(symmetrizer(single, perron_pair(single))(0, 0) == 3.0);

  CHECK(code_of([&] { symmetrizer(Matrix(3), perron_pair(a)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("symmetrizer keeps a symmetric matrix and kills the residual") {
  SplitMix64 rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix s = spectest::random_symmetric(rng);
    const Matrix sym = symmetrizer(s, perron_pair(s, 1e-13));
    for (int i = 0; i < s.dim(); ++i) {
      for (int j = 0; j < s.dim(); ++j) {
        CHECK(std::abs(sym(i, j) - s(i, j)) <= 1e-9 * std::max(1.0, s(i, j)));
      }
    }
    CHECK(line_sum_residual(sym) <= 1e-12);
  }
}

TEST_CASE("symmetrizer merges the left and right Perron vectors") {
  SplitMix64 rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = gen_instance(random_spec(rng));
    const PerronPair pp = perron_pair(a, 1e-13);
    const Matrix b = symmetrizer(a, pp);
    const PositiveVector w = elementwise_sqrt(hadamard(pp.left, pp.right));

    const std::vector<double> bw = matvec(b, w.values());
    const std::vector<double> btw = matvec_transpose(b, w.values());
    for (int i = 0; i < a.dim(); ++i) {
      CHECK(std::abs(bw[i] - pp.root * w[i]) <= 1e-9 * std::max(1.0, pp.root));
      CHECK(std::abs(btw[i] - pp.root * w[i]) <= 1e-9 * std::max(1.0, pp.root));
    }
  }
}

}  // TEST_SUITE
