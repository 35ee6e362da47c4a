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

#include "specrad/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "specrad/perron.hpp"
#include "specrad/variational.hpp"

namespace specrad {

namespace {

struct Token {
  std::string_view text;
  int line;    // 1-based
  int column;  // 1-based
};

// Whitespace tokenizer that tracks source positions and skips '%' comment
// lines (Matrix Market style) on request.
class Tokenizer {
 public:
  Tokenizer(std::string_view text, bool skip_comment_lines)
      : text_(text), skip_comments_(skip_comment_lines) {}

  std::optional<Token> next() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        advance_line();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++column_;
        continue;
      }
      if (skip_comments_ && c == '%' && column_at_line_start_) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= text_.size()) return std::nullopt;

    const size_t start = pos_;
    const int line = line_;
    const int column = column_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(
                                      text_[pos_]))) {
      ++pos_;
      ++column_;
    }
    column_at_line_start_ = false;
    return Token{text_.substr(start, pos_ - start), line, column};
  }

 private:
  void advance_line() {
    ++pos_;
    ++line_;
    column_ = 1;
    column_at_line_start_ = true;
  }

  std::string_view text_;
  bool skip_comments_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  bool column_at_line_start_ = true;
};

double parse_double_token(const Token& tok) {
  std::string_view text = tok.text;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected a number, got '" + std::string(tok.text) + "'",
                     tok.line, tok.column);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite entry '" + std::string(tok.text) + "'",
                     tok.line, tok.column);
  }
  return value;
}

long parse_int_token(const Token& tok) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(
      tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok.text) + "'",
                     tok.line, tok.column);
  }
  return value;
}

Token expect_token(Tokenizer& tok, const char* what) {
  std::optional<Token> t = tok.next();
  if (!t) throw ParseError(std::string("unexpected end of input, expected ") + what);
  return *t;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Header: %%MatrixMarket matrix <array|coordinate> <real|integer> general
MatrixFormat parse_mm_header(Tokenizer& tok) {
  const Token banner = expect_token(tok, "Matrix Market banner");
  if (lowercase(banner.text) != "%%matrixmarket") {
    throw ParseError("missing %%MatrixMarket banner", banner.line,
                     banner.column);
  }
  const Token object = expect_token(tok, "object word");
  if (lowercase(object.text) != "matrix") {
    throw ParseError("unsupported object '" + std::string(object.text) + "'",
                     object.line, object.column);
  }
  const Token format = expect_token(tok, "format word");
  const std::string fmt = lowercase(format.text);
  if (fmt != "array" && fmt != "coordinate") {
    throw ParseError("unsupported format '" + std::string(format.text) + "'",
                     format.line, format.column);
  }
  const Token field = expect_token(tok, "field word");
  const std::string fld = lowercase(field.text);
  if (fld != "real" && fld != "integer") {
    throw ParseError("unsupported field '" + std::string(field.text) + "'",
                     field.line, field.column);
  }
  const Token symmetry = expect_token(tok, "symmetry word");
  if (lowercase(symmetry.text) != "general") {
    throw ParseError(
        "unsupported symmetry '" + std::string(symmetry.text) + "'",
        symmetry.line, symmetry.column);
  }
  return fmt == "array" ? MatrixFormat::MatrixMarketArray
                        : MatrixFormat::MatrixMarketCoordinate;
}

int parse_square_size(const Token& rows_tok, const Token& cols_tok) {
  const long rows = parse_int_token(rows_tok);
  const long cols = parse_int_token(cols_tok);
  if (rows < 1 || cols < 1) {
    throw ParseError("matrix dimensions must be positive", rows_tok.line,
                     rows_tok.column);
  }
  if (rows != cols) {
    throw ParseError("non-square matrix: " + std::to_string(rows) + " x " +
                         std::to_string(cols),
                     rows_tok.line, rows_tok.column);
  }
  return static_cast<int>(rows);
}

Matrix parse_matrix_market(std::string_view text, MatrixFormat requested) {
  Tokenizer tok(text, /*skip_comment_lines=*/true);
  const MatrixFormat declared = parse_mm_header(tok);
  if (declared != requested) {
    throw ParseError(declared == MatrixFormat::MatrixMarketArray
                         ? "header declares array format"
                         : "header declares coordinate format",
                     1, 1);
  }

  if (declared == MatrixFormat::MatrixMarketArray) {
    const Token rows_tok = expect_token(tok, "row count");
    const Token cols_tok = expect_token(tok, "column count");
    const int n = parse_square_size(rows_tok, cols_tok);
    Matrix m(n);
    // Array data is column-major per the Matrix Market convention.
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        m.set(i, j, parse_double_token(expect_token(tok, "matrix entry")));
      }
    }
    if (const auto extra = tok.next()) {
      throw ParseError("trailing content '" + std::string(extra->text) + "'",
                       extra->line, extra->column);
    }
    return m;
  }

  const Token rows_tok = expect_token(tok, "row count");
  const Token cols_tok = expect_token(tok, "column count");
  const Token nnz_tok = expect_token(tok, "nonzero count");
  const int n = parse_square_size(rows_tok, cols_tok);
  const long nnz = parse_int_token(nnz_tok);
  if (nnz < 0 || nnz > static_cast<long>(n) * n) {
    throw ParseError("nonzero count out of range", nnz_tok.line,
                     nnz_tok.column);
  }
  Matrix m(n);
  std::set<std::pair<long, long>> seen;
  for (long k = 0; k < nnz; ++k) {
    const Token i_tok = expect_token(tok, "row index");
    const Token j_tok = expect_token(tok, "column index");
    const Token v_tok = expect_token(tok, "entry value");
    const long i = parse_int_token(i_tok);
    const long j = parse_int_token(j_tok);
    if (i < 1 || i > n) {
      throw ParseError("row index out of range", i_tok.line, i_tok.column);
    }
    if (j < 1 || j > n) {
      throw ParseError("column index out of range", j_tok.line, j_tok.column);
    }
    if (!seen.insert({i, j}).second) {
      throw ParseError("duplicate entry (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")",
                       i_tok.line, i_tok.column);
    }
    m.set(static_cast<int>(i) - 1, static_cast<int>(j) - 1,
          parse_double_token(v_tok));
  }
  if (const auto extra = tok.next()) {
    throw ParseError("trailing content '" + std::string(extra->text) + "'",
                     extra->line, extra->column);
  }
  return m;
}

Matrix parse_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    // Blank lines are allowed only as trailing newlines.
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (pos <= text.size() &&
          text.find_first_not_of(" \t\r\n", pos) != std::string_view::npos) {
        throw ParseError("blank line inside matrix", line_no, 1);
      }
      continue;
    }

    std::vector<double> row;
    size_t field_start = 0;
    while (true) {
      const size_t comma = line.find(',', field_start);
      std::string_view field =
          line.substr(field_start, comma == std::string_view::npos
                                       ? line.size() - field_start
                                       : comma - field_start);
      const size_t lead = field.find_first_not_of(" \t");
      if (lead == std::string_view::npos) {
        throw ParseError("empty field", line_no,
                         static_cast<int>(field_start) + 1);
      }
      const size_t tail = field.find_last_not_of(" \t");
      row.push_back(parse_double_token(
          Token{field.substr(lead, tail - lead + 1), line_no,
                static_cast<int>(field_start + lead) + 1}));
      if (comma == std::string_view::npos) break;
      field_start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged row: expected " +
                           std::to_string(rows.front().size()) +
                           " fields, got " + std::to_string(row.size()),
                       line_no, 1);
    }
    rows.push_back(std::move(row));
  }

  if (rows.empty()) throw ParseError("empty input");
  const size_t n = rows.size();
  if (rows.front().size() != n) {
    throw ParseError("non-square matrix: " + std::to_string(n) + " rows, " +
                     std::to_string(rows.front().size()) + " columns");
  }
  Matrix m(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    }
  }
  return m;
}

}  // namespace

Matrix parse_matrix(std::string_view text, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::Csv:
      return parse_csv(text);
    case MatrixFormat::MatrixMarketArray:
    case MatrixFormat::MatrixMarketCoordinate:
      return parse_matrix_market(text, format);
  }
  throw Error(ErrorCode::InvalidArgument, "parse_matrix: unknown format");
}

MatrixFormat detect_format(std::string_view filename,
                           std::string_view content) {
  const std::string lower = lowercase(filename);
  if (lower.size() >= 4 && lower.substr(lower.size() - 4) == ".csv") {
    return MatrixFormat::Csv;
  }
  Tokenizer tok(content, /*skip_comment_lines=*/false);
  return parse_mm_header(tok);
}

std::string format_double(double value) {
  char buffer[40];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string emit_matrix_market_array(const Matrix& a) {
  std::string out = "%%MatrixMarket matrix array real general\n";
  out += std::to_string(a.dim()) + " " + std::to_string(a.dim()) + "\n";
  for (int j = 0; j < a.dim(); ++j) {
    for (int i = 0; i < a.dim(); ++i) {
      out += format_double(a(i, j));
      out += '\n';
    }
  }
  return out;
}

std::string emit_matrix_market_coordinate(const Matrix& a) {
  long nnz = 0;
  for (double v : a.entries()) {
    if (v != 0.0) ++nnz;
  }
  std::string out = "%%MatrixMarket matrix coordinate real general\n";
  out += std::to_string(a.dim()) + " " + std::to_string(a.dim()) + " " +
         std::to_string(nnz) + "\n";
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (a(i, j) == 0.0) continue;
      out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
             format_double(a(i, j)) + "\n";
    }
  }
  return out;
}

std::string matrix_digest(const Matrix& a) {
  const std::string canonical = emit_matrix_market_array(a);
  uint64_t hash = 1469598103934665603ULL;
  for (unsigned char byte : canonical) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + hex;
}

namespace {

nlohmann::json class_to_json(const MatrixClass& c) {
  return {{"nonnegative", c.nonnegative},
          {"metzler", c.metzler},
          {"irreducible", c.irreducible}};
}

}  // namespace

std::string write_report(const Report& report) {
  nlohmann::json j;
  j["input_digest"] = report.input_digest;
  j["n"] = report.n;
  j["class"] = class_to_json(report.matrix_class);
  nlohmann::json results = nlohmann::json::object();
  for (const auto& [name, r] : report.results) {
    nlohmann::json entry = {{"value", r.value},
                            {"iterations", r.iterations},
                            {"wall_time_ms", r.wall_time_ms}};
    for (const auto& [key, value] : r.details.items()) entry[key] = value;
    results[name] = std::move(entry);
  }
  j["results"] = std::move(results);
  j["agreement"] = report.agreement;
  j["tolerances"] = report.tolerances;
  return j.dump(2) + "\n";
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

nlohmann::json saddle_details(const SaddleCertificate& cert) {
  return {{"x_hat", cert.x_hat.values()},
          {"y_hat", cert.y_hat.values()},
          {"objective_at_saddle", cert.objective_at_saddle},
          {"inner_gap", cert.inner_gap},
          {"cw_lo", cert.cw_interval.lo},
          {"cw_hi", cert.cw_interval.hi},
          {"tolerance", cert.tolerance}};
}

void require_analyzable(const MatrixClass& cls, const char* op) {
  if (!cls.nonnegative) {
    throw Error(ErrorCode::NotNonnegative,
                std::string(op) + ": matrix has negative entries");
  }
  if (!cls.irreducible) {
    throw Error(ErrorCode::NotIrreducible,
                std::string(op) + ": support graph is not strongly connected");
  }
}

double compute_agreement(const std::map<std::string, MethodResult>& results) {
  if (results.empty()) return 0.0;
  double lo = results.begin()->second.value;
  double hi = lo;
  for (const auto& [name, r] : results) {
    lo = std::min(lo, r.value);
    hi = std::max(hi, r.value);
  }
  return hi - lo;
}

}  // namespace

Report analyze_matrix(const Matrix& a, const AnalyzeOptions& options) {
  const MatrixClass cls = classify(a);
  require_analyzable(cls, "analyze");

  Report report;
  report.input_digest = matrix_digest(a);
  report.n = a.dim();
  report.matrix_class = cls;
  report.tolerances = {
      {"eps", options.eps},
      {"tol", options.tol},
      {"saddle_tol_direct", options.saddle_tol_direct},
      {"saddle_tol_iterative", options.saddle_tol_iterative}};

  const auto record = [&](const std::string& name, MethodResult result,
                          std::chrono::steady_clock::time_point start) {
    result.wall_time_ms = options.timing ? elapsed_ms(start) : 0.0;
    report.results[name] = std::move(result);
  };

  {
    const auto start = std::chrono::steady_clock::now();
    const BoundInterval interval = cw_certified_interval(a, options.eps);
    MethodResult r;
    r.value = 0.5 * (interval.lo + interval.hi);
    r.details = {{"lo", interval.lo},
                 {"hi", interval.hi},
                 {"witness_x", interval.witness.values()}};
    record("collatz_wielandt", std::move(r), start);
  }

  const PerronPair pp = perron_pair(a, options.tol);
  {
    const auto start = std::chrono::steady_clock::now();
    const SimplexVector weights(hadamard(pp.left, pp.right).values());
    MethodResult r;
    r.value = dvf_objective(a, weights, pp.right);
    record("dvf_at_perron", std::move(r), start);
  }
  {
    const auto start = std::chrono::steady_clock::now();
    MethodResult r;
    r.value = fiedler_objective(a, pp.right, pp.left);
    record("fiedler_at_perron", std::move(r), start);
  }
  {
    const auto start = std::chrono::steady_clock::now();
    const SaddleCertificate cert = saddle_direct(a, options.saddle_tol_direct);
    MethodResult r;
    r.value = cert.r_estimate;
    r.details = saddle_details(cert);
    r.iterations = cert.iterations;
    record("saddle_direct", std::move(r), start);
  }
  {
    const auto start = std::chrono::steady_clock::now();
    const SaddleCertificate cert =
        saddle_iterative(a, options.saddle_tol_iterative);
    MethodResult r;
    r.value = cert.r_estimate;
    r.details = saddle_details(cert);
    r.iterations = cert.iterations;
    record("saddle_iterative", std::move(r), start);
  }
  if (options.force_oracle || a.dim() <= options.oracle_dim_limit) {
    const auto start = std::chrono::steady_clock::now();
    const OracleBracket bracket =
        oracle_bracket(a, std::min(options.eps, 1e-9));
    MethodResult r;
    r.value = 0.5 * (bracket.lo + bracket.hi);
    r.details = {{"bracket_lo", bracket.lo}, {"bracket_hi", bracket.hi}};
    record("oracle", std::move(r), start);
  }

  report.agreement = compute_agreement(report.results);
  return report;
}

Report compare_at_perron(const Matrix& a, double tol) {
  const MatrixClass cls = classify(a);
  require_analyzable(cls, "compare");

  Report report;
  report.input_digest = matrix_digest(a);
  report.n = a.dim();
  report.matrix_class = cls;
  report.tolerances = {{"tol", tol}};

  const PerronPair pp = perron_pair(a, tol);
  {
    const auto [lo, hi] = cw_ratios(a, pp.right);
    MethodResult r;
    r.value = 0.5 * (lo + hi);
    r.details = {{"lo", lo}, {"hi", hi}};
    report.results["collatz_wielandt"] = std::move(r);
  }
  {
    MethodResult r;
    r.value = dvf_objective(a, SimplexVector(hadamard(pp.left, pp.right).values()),
                            pp.right);
    report.results["dvf_at_perron"] = std::move(r);
  }
  {
    MethodResult r;
    r.value = fiedler_objective(a, pp.right, pp.left);
    report.results["fiedler_at_perron"] = std::move(r);
  }
  {
    const SaddleCertificate cert = saddle_direct(a);
    MethodResult r;
    r.value = cert.r_estimate;
    r.details = saddle_details(cert);
    r.iterations = cert.iterations;
    report.results["saddle_direct"] = std::move(r);
  }

  report.agreement = compute_agreement(report.results);
  return report;
}

nlohmann::json instance_spec_to_json(const InstanceSpec& spec) {
  nlohmann::json j = {{"n", spec.n},
                      {"density", spec.density},
                      {"entry_range", {spec.entry_lo, spec.entry_hi}},
                      {"seed", spec.seed}};
  if (spec.metzler_diag_range) {
    j["metzler_diag_range"] = {spec.metzler_diag_range->first,
                               spec.metzler_diag_range->second};
  }
  return j;
}

InstanceSpec instance_spec_from_json(const nlohmann::json& config) {
  try {
    InstanceSpec spec;
    spec.n = config.at("n").get<int>();
    spec.density = config.at("density").get<double>();
    const auto& range = config.at("entry_range");
    spec.entry_lo = range.at(0).get<double>();
    spec.entry_hi = range.at(1).get<double>();
    spec.seed = config.at("seed").get<uint64_t>();
    if (config.contains("metzler_diag_range") &&
        !config["metzler_diag_range"].is_null()) {
      const auto& diag = config["metzler_diag_range"];
      spec.metzler_diag_range = {diag.at(0).get<double>(),
                                 diag.at(1).get<double>()};
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance spec: ") + e.what());
  }
}

}  // namespace specrad
