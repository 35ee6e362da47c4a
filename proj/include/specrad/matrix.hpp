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

#include <vector>

#include "specrad/errors.hpp"

namespace specrad {

// Strictly positive finite vector.  Used for diagonal scalings, Perron
// vectors and test points; construction rejects zeros, negatives, NaN and
// infinities so downstream code can divide by entries freely.
class PositiveVector {
 public:
  explicit PositiveVector(std::vector<double> values);

  static PositiveVector ones(int n);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<size_t>(i)]; }
  const std::vector<double>& values() const { return values_; }

  double min() const;
  double max() const;

 private:
  std::vector<double> values_;
};

// Elementwise algebra on positive vectors.  All results are again strictly
// positive; mismatched dimensions throw DimensionMismatch.
PositiveVector hadamard(const PositiveVector& a, const PositiveVector& b);
PositiveVector elementwise_sqrt(const PositiveVector& a);
PositiveVector elementwise_inverse(const PositiveVector& a);
PositiveVector elementwise_divide(const PositiveVector& a,
                                  const PositiveVector& b);

// Dense real square matrix, row-major.  Entries must stay finite; `set`
// enforces this so every instance satisfies the class invariant.
class Matrix {
 public:
  explicit Matrix(int n);
  Matrix(int n, std::vector<double> entries);

  int dim() const { return n_; }

  double operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * n_ + j];
  }
  void set(int i, int j, double value);

  const std::vector<double>& entries() const { return entries_; }

  static Matrix identity(int n);

 private:
  int n_;
  std::vector<double> entries_;
};

struct MatrixClass {
  bool nonnegative = false;
  bool metzler = false;
  bool irreducible = false;
};

// Structural classification.  Irreducibility is strong connectivity of the
// directed graph with an edge i->j iff A(i,j) != 0 for i != j; a 1x1 matrix
// counts as irreducible.  Entries are structurally zero only when exactly 0.
MatrixClass classify(const Matrix& a);

// B = D_y A D_y^{-1}, i.e. B(i,j) = y_i * A(i,j) / y_j.  The diagonal is
// copied verbatim so it is preserved bit-for-bit.
Matrix apply_diag_similarity(const Matrix& a, const PositiveVector& y);

// Helpers shared across the solvers.

Matrix transpose(const Matrix& a);

// A + c*I.
Matrix add_diagonal_shift(const Matrix& a, double c);

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);
std::vector<double> matvec_transpose(const Matrix& a,
                                     const std::vector<double>& x);

// max_i sum_j |A(i,j)|
double inf_norm(const Matrix& a);

std::vector<double> row_sums(const Matrix& a);
std::vector<double> column_sums(const Matrix& a);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double inf_norm(const std::vector<double>& v);

}  // namespace specrad
