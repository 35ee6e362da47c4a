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

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "specrad/matrix.hpp"
#include "specrad/oracle.hpp"

namespace specrad {

enum class MatrixFormat {
  MatrixMarketArray,
  MatrixMarketCoordinate,
  Csv,
};

// Parses dense square matrices.  Matrix Market files carry the usual
// banner; the coordinate variant fills unspecified entries with zero.
// Malformed input raises ParseError with a 1-based line/column; non-square
// shapes and non-finite values are rejected as parse errors too.
Matrix parse_matrix(std::string_view text, MatrixFormat format);

// ".csv" selects CSV; anything else must carry a Matrix Market banner,
// whose format word picks the variant.
MatrixFormat detect_format(std::string_view filename, std::string_view content);

// Emission uses shortest round-trip formatting, so parse(emit(A)) == A
// exactly for both variants.
std::string emit_matrix_market_array(const Matrix& a);
std::string emit_matrix_market_coordinate(const Matrix& a);

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// FNV-1a 64 over the canonical array emission, rendered as
// "fnv1a64:<16 hex digits>".
std::string matrix_digest(const Matrix& a);

struct MethodResult {
  double value = 0.0;
  nlohmann::json details = nlohmann::json::object();
  long long iterations = 0;
  double wall_time_ms = 0.0;
};

// Cross-validation report.  Method names come from the fixed set
// {collatz_wielandt, dvf_at_perron, fiedler_at_perron, saddle_direct,
// saddle_iterative, oracle}; agreement is the largest pairwise difference
// between the reported values.
struct Report {
  std::string input_digest;
  int n = 0;
  MatrixClass matrix_class;
  std::map<std::string, MethodResult> results;
  double agreement = 0.0;
  std::map<std::string, double> tolerances;
};

// Canonical JSON: keys sorted, floats shortest round-trip, trailing
// newline.  Byte-identical for equal reports.
std::string write_report(const Report& report);

struct AnalyzeOptions {
  double tol = 1e-12;                 // Perron residual tolerance
  double eps = 1e-10;                 // certified interval width
  double saddle_tol_direct = 1e-10;
  double saddle_tol_iterative = 1e-8;
  int oracle_dim_limit = 64;          // oracle auto-disabled above this
  bool force_oracle = false;
  bool timing = false;                // wall_time_ms stays 0.0 when off
};

// Runs every method on a nonnegative irreducible matrix.
Report analyze_matrix(const Matrix& a, const AnalyzeOptions& options = {});

// The four objectives evaluated at the Perron data only.
Report compare_at_perron(const Matrix& a, double tol = 1e-12);

// JSON config form of InstanceSpec, e.g.
//   {"n":5,"density":0.3,"entry_range":[0.1,10.0],"seed":42,
//    "metzler_diag_range":[-2.0,2.0]}
// with metzler_diag_range optional.
nlohmann::json instance_spec_to_json(const InstanceSpec& spec);
InstanceSpec instance_spec_from_json(const nlohmann::json& config);

}  // namespace specrad
