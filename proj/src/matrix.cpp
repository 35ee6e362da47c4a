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

#include "specrad/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace specrad {

namespace {

void require_same_dim(int a, int b, const char* op) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": dimensions " + std::to_string(a) +
                    " and " + std::to_string(b) + " differ");
  }
}

}  // namespace

PositiveVector::PositiveVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "PositiveVector: empty");
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] <= 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "PositiveVector: entry " + std::to_string(i) +
                      " is not strictly positive and finite");
    }
  }
}

PositiveVector PositiveVector::ones(int n) {
  return PositiveVector(std::vector<double>(static_cast<size_t>(n), 1.0));
}

double PositiveVector::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

double PositiveVector::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

PositiveVector hadamard(const PositiveVector& a, const PositiveVector& b) {
  require_same_dim(a.size(), b.size(), "hadamard");
  std::vector<double> out(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return PositiveVector(std::move(out));
}

PositiveVector elementwise_sqrt(const PositiveVector& a) {
  std::vector<double> out(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[i] = std::sqrt(a[i]);
  return PositiveVector(std::move(out));
}

PositiveVector elementwise_inverse(const PositiveVector& a) {
  std::vector<double> out(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[i] = 1.0 / a[i];
  return PositiveVector(std::move(out));
}

PositiveVector elementwise_divide(const PositiveVector& a,
                                  const PositiveVector& b) {
  require_same_dim(a.size(), b.size(), "elementwise_divide");
  std::vector<double> out(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[i] = a[i] / b[i];
  return PositiveVector(std::move(out));
}

Matrix::Matrix(int n) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "Matrix: dimension must be >= 1");
  }
  entries_.assign(static_cast<size_t>(n) * n, 0.0);
}

Matrix::Matrix(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "Matrix: dimension must be >= 1");
  }
  if (entries_.size() != static_cast<size_t>(n) * n) {
    throw Error(ErrorCode::InvalidArgument,
                "Matrix: expected " + std::to_string(n * n) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "Matrix: non-finite entry");
    }
  }
}

void Matrix::set(int i, int j, double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::InvalidArgument, "Matrix::set: non-finite value");
  }
  entries_[static_cast<size_t>(i) * n_ + j] = value;
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

namespace {

// Reachability sweep over the off-diagonal support graph, forward or
// backward.  Strong connectivity == full reach in both directions from
// node 0.
int count_reachable(const Matrix& a, bool forward) {
  const int n = a.dim();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || seen[j]) continue;
      const double edge = forward ? a(i, j) : a(j, i);
      if (edge != 0.0) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count;
}

}  // namespace

MatrixClass classify(const Matrix& a) {
  const int n = a.dim();
  MatrixClass c;
  c.nonnegative = true;
  c.metzler = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = a(i, j);
      if (v < 0.0) {
        c.nonnegative = false;
        if (i != j) c.metzler = false;
      }
    }
  }
  c.irreducible = (n == 1) || (count_reachable(a, true) == n &&
                               count_reachable(a, false) == n);
  return c;
}

Matrix apply_diag_similarity(const Matrix& a, const PositiveVector& y) {
  const int n = a.dim();
  require_same_dim(n, y.size(), "apply_diag_similarity");
  Matrix b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.set(i, j, i == j ? a(i, i) : y[i] * a(i, j) / y[j]);
    }
  }
  return b;
}

Matrix transpose(const Matrix& a) {
  const int n = a.dim();
  Matrix t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.set(j, i, a(i, j));
  return t;
}

Matrix add_diagonal_shift(const Matrix& a, double c) {
  Matrix b = a;
  for (int i = 0; i < a.dim(); ++i) b.set(i, i, a(i, i) + c);
  return b;
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
  const int n = a.dim();
  require_same_dim(n, static_cast<int>(x.size()), "matvec");
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += a(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> matvec_transpose(const Matrix& a,
                                     const std::vector<double>& x) {
  const int n = a.dim();
  require_same_dim(n, static_cast<int>(x.size()), "matvec_transpose");
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[j] += a(i, j) * x[i];
  }
  return out;
}

double inf_norm(const Matrix& a) {
  double best = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    double row = 0.0;
    for (int j = 0; j < a.dim(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

std::vector<double> row_sums(const Matrix& a) {
  return matvec(a, std::vector<double>(static_cast<size_t>(a.dim()), 1.0));
}

std::vector<double> column_sums(const Matrix& a) {
  return matvec_transpose(a,
                          std::vector<double>(static_cast<size_t>(a.dim()), 1.0));
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double inf_norm(const std::vector<double>& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

}  // namespace specrad
