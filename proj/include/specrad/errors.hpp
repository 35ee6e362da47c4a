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

#include <stdexcept>
#include <string>

namespace specrad {

// Error taxonomy shared by the whole library.  The CLI maps these onto
// process exit codes: usage errors -> 1, parse errors -> 2, precondition
// violations -> 3, convergence failures -> 4.
enum class ErrorCode {
  InvalidArgument,    // malformed value passed to a constructor or solver
  DimensionMismatch,  // operands of incompatible sizes
  NotNonnegative,     // matrix has a negative entry where none is allowed
  NotMetzler,         // negative off-diagonal entry
  NotIrreducible,     // off-diagonal support graph not strongly connected
  NoConvergence,      // iteration budget exhausted
  Parse,              // malformed input file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the 1-based source position when known (0 = unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(ErrorCode::Parse, what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// CLI exit-code contract.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return 1;
    case ErrorCode::Parse:
      return 2;
    case ErrorCode::NotNonnegative:
    case ErrorCode::NotMetzler:
    case ErrorCode::NotIrreducible:
    case ErrorCode::DimensionMismatch:
      return 3;
    case ErrorCode::NoConvergence:
      return 4;
  }
  return 1;
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::NotNonnegative:
      return "NotNonnegative";
    case ErrorCode::NotMetzler:
      return "NotMetzler";
    case ErrorCode::NotIrreducible:
      return "NotIrreducible";
    case ErrorCode::NoConvergence:
      return "NoConvergence";
    case ErrorCode::Parse:
      return "ParseError";
  }
  return "Error";
}

}  // namespace specrad
