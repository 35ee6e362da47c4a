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
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "specrad/io.hpp"
#include "specrad/rng.hpp"
#include "test_support.hpp"

using namespace specrad;
using nlohmann::json;
using spectest::random_spec;

TEST_SUITE("io") {

TEST_CASE("csv parsing") {
  const Matrix m = parse_matrix("0,2\n8,0", MatrixFormat::Csv);
  CHECK(m.dim() == 2);
  CHECK(m(0, 0) == 0.0);
  CHECK(m(0, 1) == 2.0);
  CHECK(m(1, 0) == 8.0);
  CHECK(m(1, 1) == 0.0);

  // Whitespace and trailing newline tolerated.
  const Matrix spaced = parse_matrix(" 1.5 , 2 \n3, 4.25 \n", MatrixFormat::Csv);
  CHECK(spaced(0, 0) == 1.5);
  CHECK(spaced(1, 1) == 4.25);
}

TEST_CASE("csv errors carry positions") {
  try {
    parse_matrix("1,2\n3", MatrixFormat::Csv);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_matrix("1,2,3\n4,5,6", MatrixFormat::Csv), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,x\n3,4", MatrixFormat::Csv), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,nan\n3,4", MatrixFormat::Csv), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,2\n\n3,4", MatrixFormat::Csv), ParseError);
  CHECK_THROWS_AS(parse_matrix("", MatrixFormat::Csv), ParseError);
}

TEST_CASE("matrix market coordinate parsing") {
  const std::string text =
      "%%MatrixMarket matrix coordinate real general\n"
      "% a comment line\n"
      "2 2 2\n"
      "1 2 2.0\n"
      "2 1 8.0\n";
  const Matrix m = parse_matrix(text, MatrixFormat::MatrixMarketCoordinate);
  CHECK(m(0, 1) == 2.0);
  CHECK(m(1, 0) == 8.0);
  CHECK(m(0, 0) == 0.0);  // unspecified entries are zero

  CHECK_THROWS_AS(parse_matrix("%%MatrixMarket matrix coordinate real general\n"
                               "2 2 2\n1 2 2.0\n1 2 3.0\n",
                               MatrixFormat::MatrixMarketCoordinate),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix("%%MatrixMarket matrix coordinate real general\n"
                               "2 2 1\n3 1 2.0\n",
                               MatrixFormat::MatrixMarketCoordinate),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix("%%MatrixMarket matrix coordinate real general\n"
                               "2 3 1\n1 1 2.0\n",
                               MatrixFormat::MatrixMarketCoordinate),
                  ParseError);
}

TEST_CASE("matrix market array parsing is column-major") {
  const std::string text =
      "%%MatrixMarket matrix array real general\n"
      "2 2\n"
      "1\n3\n2\n4\n";
  const Matrix m = parse_matrix(text, MatrixFormat::MatrixMarketArray);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(0, 1) == 2.0);
  CHECK(m(1, 0) == 3.0);
  CHECK(m(1, 1) == 4.0);

  // Declared variant must match the requested one.
  CHECK_THROWS_AS(parse_matrix(text, MatrixFormat::MatrixMarketCoordinate),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix("no banner\n1 1\n2\n",
                               MatrixFormat::MatrixMarketArray),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix("%%MatrixMarket matrix array real general\n"
                               "2 2\n1\n3\n2\n",
                               MatrixFormat::MatrixMarketArray),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix("%%MatrixMarket matrix array real general\n"
                               "2 2\n1\n3\n2\n4\n5\n",
                               MatrixFormat::MatrixMarketArray),
                  ParseError);
}

TEST_CASE("emission round-trips exactly in both variants") {
  SplitMix64 rng(1313);
  for (int trial = 0; trial < 20; ++trial) {
    InstanceSpec spec = random_spec(rng, 1, 8);
    if (trial % 3 == 0) spec.metzler_diag_range = {{-2.0, 2.0}};
    const Matrix a = gen_instance(spec);

    const Matrix via_array = parse_matrix(emit_matrix_market_array(a),
                                          MatrixFormat::MatrixMarketArray);
    CHECK(via_array.entries() == a.entries());

    const Matrix via_coord = parse_matrix(emit_matrix_market_coordinate(a),
                                          MatrixFormat::MatrixMarketCoordinate);
    CHECK(via_coord.entries() == a.entries());
  }
}

TEST_CASE("format detection") {
  CHECK(detect_format("m.csv", "1,2\n3,4") == MatrixFormat::Csv);
  CHECK(detect_format("M.CSV", "1") == MatrixFormat::Csv);
  CHECK(detect_format("m.mtx", "%%MatrixMarket matrix array real general\n") ==
        MatrixFormat::MatrixMarketArray);
  CHECK(detect_format("m.mtx",
                      "%%MatrixMarket matrix coordinate real general\n") ==
        MatrixFormat::MatrixMarketCoordinate);
  CHECK_THROWS_AS(detect_format("m.mtx", "1 2\n"), ParseError);
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(4.0) == "4");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-0.1) == "-0.1");
  const double tricky = 0.1 + 0.2;
  CHECK(std::stod(format_double(tricky)) == tricky);
}

TEST_CASE("digest is stable and content-sensitive") {
  const Matrix a(2, {0, 2, 8, 0});
  const std::string digest = matrix_digest(a);
  CHECK(digest.substr(0, 8) == "fnv1a64:");
  CHECK(digest.size() == 8 + 16);
  CHECK(matrix_digest(a) == digest);
  CHECK(matrix_digest(Matrix(2, {0, 2, 8, 1})) != digest);
}

TEST_CASE("write_report is canonical") {
  Report report;
  report.input_digest = "fnv1a64:0000000000000000";
  report.n = 2;
  report.matrix_class = {true, true, true};
  MethodResult r;
  r.value = 4.0;
  r.details = {{"lo", 3.9}, {"hi", 4.1}};
  report.results["collatz_wielandt"] = r;
  report.agreement = 0.0;
  report.tolerances = {{"eps", 1e-10}};

  const std::string once = write_report(report);
  const std::string twice = write_report(report);
  CHECK(once == twice);
  CHECK(once.back() == '\n');

  const json parsed = json::parse(once);
  CHECK(parsed["n"] == 2);
  CHECK(parsed["results"]["collatz_wielandt"]["value"] == 4.0);
  CHECK(parsed["results"]["collatz_wielandt"]["lo"] == 3.9);

  // Keys are emitted sorted.
  const size_t agreement_pos = once.find("\"agreement\"");
  const size_t class_pos = once.find("\"class\"");
  const size_t results_pos = once.find("\"results\"");
  CHECK(agreement_pos < class_pos);
  CHECK(class_pos < results_pos);
}

TEST_CASE("empty report stays valid") {
  Report report;
  report.input_digest = "fnv1a64:0000000000000000";
  report.n = 1;
  const json parsed = json::parse(write_report(report));
  CHECK(parsed["results"].is_object());
  CHECK(parsed["results"].empty());
  CHECK(parsed["agreement"] == 0.0);
}

TEST_CASE("analyze agreement is recomputable and small") {
  const Matrix a(2, {0, 2, 8, 0});
  const Report report = analyze_matrix(a);
  CHECK(report.results.count("collatz_wielandt") == 1);
  CHECK(report.results.count("dvf_at_perron") == 1);
  CHECK(report.results.count("fiedler_at_perron") == 1);
  CHECK(report.results.count("saddle_direct") == 1);
  CHECK(report.results.count("saddle_iterative") == 1);
  CHECK(report.results.count("oracle") == 1);

  double lo = report.results.begin()->second.value;
  double hi = lo;
  for (const auto& [name, r] : report.results) {
    lo = std::min(lo, r.value);
    hi = std::max(hi, r.value);
    CHECK(r.wall_time_ms == 0.0);  // timing off by default
  }
  CHECK(report.agreement == hi - lo);
  CHECK(report.agreement <= 1e-6 * (1.0 + hi));

  CHECK(spectest::code_of([] { analyze_matrix(Matrix(2, {1, 0, 0, 1})); }) ==
        ErrorCode::NotIrreducible);
}

TEST_CASE("compare report evaluates at the Perron data") {
  const Report report = compare_at_perron(Matrix(2, {0, 2, 8, 0}));
  CHECK(report.results.size() == 4);
  for (const auto& [name, r] : report.results) {
    CHECK(std::abs(r.value - 4.0) <= 1e-9);
  }
  CHECK(report.agreement <= 1e-9);
}

TEST_CASE("instance spec round-trips through json") {
  InstanceSpec spec;
  spec.n = 7;
  spec.density = 0.25;
  spec.entry_lo = 0.5;
  spec.entry_hi = 3.5;
  spec.seed = 0xdeadbeefULL;
  spec.metzler_diag_range = {{-1.5, 2.5}};

  const InstanceSpec back = instance_spec_from_json(instance_spec_to_json(spec));
  CHECK(back.n == spec.n);
  CHECK(back.density == spec.density);
  CHECK(back.entry_lo == spec.entry_lo);
  CHECK(back.entry_hi == spec.entry_hi);
  CHECK(back.seed == spec.seed);
  REQUIRE(back.metzler_diag_range.has_value());
  CHECK(back.metzler_diag_range->first == -1.5);
  CHECK(back.metzler_diag_range->second == 2.5);

  spec.metzler_diag_range.reset();
  CHECK_FALSE(instance_spec_from_json(instance_spec_to_json(spec))
                  .metzler_diag_range.has_value());

  CHECK_THROWS_AS(instance_spec_from_json(json{{"n", 3}}), ParseError);
  CHECK(gen_instance(spec).entries() == gen_instance(spec).entries());
}

}  // TEST_SUITE
