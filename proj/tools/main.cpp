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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "specrad/balancing.hpp"
#include "specrad/io.hpp"
#include "specrad/matrix.hpp"
#include "specrad/oracle.hpp"
#include "specrad/perron.hpp"
#include "specrad/variational.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw specrad::ParseError("cannot read file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw specrad::Error(specrad::ErrorCode::InvalidArgument,
                         "cannot write file '" + path + "'");
  }
  out << content;
}

specrad::Matrix load_matrix(const std::string& path,
                            const std::string& format_flag) {
  const std::string content = read_file(path);
  specrad::MatrixFormat format;
  if (format_flag == "csv") {
    format = specrad::MatrixFormat::Csv;
  } else if (format_flag == "array") {
    format = specrad::MatrixFormat::MatrixMarketArray;
  } else if (format_flag == "coordinate") {
    format = specrad::MatrixFormat::MatrixMarketCoordinate;
  } else {
    format = specrad::detect_format(path, content);
  }
  return specrad::parse_matrix(content, format);
}

json matrix_to_json(const specrad::Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json certificate_to_json(const specrad::SaddleCertificate& cert,
                         const std::string& method) {
  return {{"method", method},
          {"r_estimate", cert.r_estimate},
          {"x_hat", cert.x_hat.values()},
          {"y_hat", cert.y_hat.values()},
          {"objective_at_saddle", cert.objective_at_saddle},
          {"inner_gap", cert.inner_gap},
          {"cw_interval",
           {{"lo", cert.cw_interval.lo},
            {"hi", cert.cw_interval.hi},
            {"witness_x", cert.cw_interval.witness.values()}}},
          {"tolerance", cert.tolerance},
          {"iterations", cert.iterations}};
}

struct GlobalFlags {
  bool json = false;
};

void report_error(const specrad::Error& e, const GlobalFlags& flags) {
  if (flags.json) {
    json j = {{"error",
               {{"code", specrad::error_code_name(e.code())},
                {"message", e.what()},
                {"exit_code", specrad::exit_code_for(e.code())}}}};
    if (const auto* pe = dynamic_cast<const specrad::ParseError*>(&e)) {
      j["error"]["line"] = pe->line();
      j["error"]["column"] = pe->column();
    }
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "specrad: " << e.what() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "specrad - certified spectral radius and spectral bound computations\n"
      "via diagonally scaled variational formulas"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json,
               "machine-readable errors on stderr; also switches sbound and "
               "compare output to JSON");

  // analyze ------------------------------------------------------------
  std::string analyze_file, analyze_format;
  specrad::AnalyzeOptions analyze_opts;
  auto* analyze = app.add_subcommand(
      "analyze", "run every method on a matrix and report the agreement");
  analyze->fallthrough();
  analyze->add_option("file", analyze_file, "matrix file")->required();
  analyze->add_option("--format", analyze_format, "input format")
      ->check(CLI::IsMember({"csv", "array", "coordinate"}));
  analyze->add_option("--eps", analyze_opts.eps,
                      "certified interval width (default 1e-10)");
  analyze->add_option("--tol", analyze_opts.tol,
                      "Perron residual tolerance (default 1e-12)");
  analyze->add_option("--saddle-tol-direct", analyze_opts.saddle_tol_direct,
                      "direct saddle tolerance (default 1e-10)");
  analyze->add_option("--saddle-tol-iterative",
                      analyze_opts.saddle_tol_iterative,
                      "iterative saddle tolerance (default 1e-8)");
  analyze->add_flag("--force-oracle", analyze_opts.force_oracle,
                    "run the oracle even above the size cutoff");
  analyze->add_flag("--timing", analyze_opts.timing,
                    "include wall times (breaks byte-stability)");
  analyze->callback([&] {
    const specrad::Matrix m = load_matrix(analyze_file, analyze_format);
    std::cout << specrad::write_report(specrad::analyze_matrix(m, analyze_opts));
  });

  // bounds ---------------------------------------------------------------
  std::string bounds_file, bounds_format;
  double bounds_eps = 1e-10;
  auto* bounds =
      app.add_subcommand("bounds", "certified Collatz-Wielandt interval");
  bounds->fallthrough();
  bounds->add_option("file", bounds_file, "matrix file")->required();
  bounds->add_option("--format", bounds_format, "input format")
      ->check(CLI::IsMember({"csv", "array", "coordinate"}));
  bounds->add_option("--eps", bounds_eps, "interval width (default 1e-10)");
  bounds->callback([&] {
    const specrad::Matrix m = load_matrix(bounds_file, bounds_format);
    const specrad::BoundInterval interval =
        specrad::cw_certified_interval(m, bounds_eps);
    print_json({{"lo", interval.lo},
                {"hi", interval.hi},
                {"witness_x", interval.witness.values()}});
  });

  // balance --------------------------------------------------------------
  std::string balance_file, balance_format, balance_out;
  double balance_tol = 1e-12;
  auto* balance_cmd = app.add_subcommand(
      "balance", "diagonal scaling to line-sum symmetry");
  balance_cmd->fallthrough();
  balance_cmd->add_option("file", balance_file, "matrix file")->required();
  balance_cmd->add_option("--format", balance_format, "input format")
      ->check(CLI::IsMember({"csv", "array", "coordinate"}));
  balance_cmd->add_option("--tol", balance_tol,
                          "residual tolerance (default 1e-12)");
  balance_cmd->add_option("--out", balance_out,
                          "write the balanced matrix to this file");
  balance_cmd->callback([&] {
    const specrad::Matrix m = load_matrix(balance_file, balance_format);
    const specrad::BalanceResult result = specrad::balance(m, balance_tol);
    print_json({{"z", result.scaling.values()},
                {"balanced", matrix_to_json(result.balanced)},
                {"residual", result.residual},
                {"objective", result.objective},
                {"iterations", result.iterations}});
    if (!balance_out.empty()) {
      write_file(balance_out,
                 specrad::emit_matrix_market_array(result.balanced));
    }
  });

  // symmetrize -------------------------------------------------------------
  std::string sym_file, sym_format, sym_out;
  double sym_tol = 1e-12;
  auto* symmetrize = app.add_subcommand(
      "symmetrize", "similarity scaling with equal left/right Perron vectors");
  symmetrize->fallthrough();
  symmetrize->add_option("file", sym_file, "matrix file")->required();
  symmetrize->add_option("--format", sym_format, "input format")
      ->check(CLI::IsMember({"csv", "array", "coordinate"}));
  symmetrize->add_option("--tol", sym_tol,
                         "Perron residual tolerance (default 1e-12)");
  symmetrize->add_option("--out", sym_out,
                         "write the symmetrized matrix to this file");
  symmetrize->callback([&] {
    const specrad::Matrix m = load_matrix(sym_file, sym_format);
    const specrad::PerronPair pp = specrad::perron_pair(m, sym_tol);
    const specrad::Matrix sym = specrad::symmetrizer(m, pp);
    const specrad::PositiveVector y_hat = specrad::elementwise_sqrt(
        specrad::elementwise_divide(pp.left, pp.right));
    print_json({{"y_hat", y_hat.values()}, {"matrix", matrix_to_json(sym)}});
    if (!sym_out.empty()) {
      write_file(sym_out, specrad::emit_matrix_market_array(sym));
    }
  });

  // certify ----------------------------------------------------------------
  std::string certify_file, certify_format, certify_method = "direct";
  double certify_tol = 0.0;  // 0 = per-method default
  auto* certify = app.add_subcommand(
      "certify", "saddle certificate for the spectral radius");
  certify->fallthrough();
  certify->add_option("file", certify_file, "matrix file")->required();
  certify->add_option("--format", certify_format, "input format")
      ->check(CLI::IsMember({"csv", "array", "coordinate"}));
  certify->add_option("--method", certify_method, "direct or iterative")
      ->check(CLI::IsMember({"direct", "iterative"}));
  certify->add_option("--tol", certify_tol,
                      "certificate tolerance (default 1e-10 direct, 1e-8 "
                      "iterative)");
  certify->callback([&] {
    const specrad::Matrix m = load_matrix(certify_file, certify_format);
    specrad::SaddleCertificate cert =
        certify_method == "direct"
            ? specrad::saddle_direct(m,
                                     certify_tol > 0.0 ? certify_tol : 1e-10)
            : specrad::saddle_iterative(
                  m, certify_tol > 0.0 ? certify_tol : 1e-8);
    print_json(certificate_to_json(cert, certify_method));
  });

  // sbound -------------------------------------------------------------
  std::string sbound_file, sbound_format;
  double sbound_tol = 1e-10;
  auto* sbound = app.add_subcommand(
      "sbound", "spectral bound of an irreducible Metzler matrix");
  sbound->fallthrough();
  sbound->add_option("file", sbound_file, "matrix file")->required();
  sbound->add_option("--format", sbound_format, "input format")
      ->check(CLI::IsMember({"csv", "array", "coordinate"}));
  sbound->add_option("--tol", sbound_tol, "tolerance (default 1e-10)");
  sbound->callback([&] {
    const specrad::Matrix m = load_matrix(sbound_file, sbound_format);
    const double s = specrad::spectral_bound(m, sbound_tol);
    if (flags.json) {
      print_json({{"spectral_bound", s}});
    } else {
      std::cout << specrad::format_double(s) << "\n";
    }
  });

  // gen ----------------------------------------------------------------
  specrad::InstanceSpec gen_spec;
  gen_spec.n = 0;
  bool gen_metzler = false, gen_coordinate = false;
  double gen_diag_lo = -2.0, gen_diag_hi = 2.0;
  std::string gen_out, gen_config;
  auto* gen = app.add_subcommand(
      "gen", "generate a seeded irreducible test instance");
  gen->fallthrough();
  gen->add_option("--n", gen_spec.n, "dimension");
  gen->add_option("--density", gen_spec.density,
                  "fraction of extra off-diagonal entries (default 0.5)");
  gen->add_option("--seed", gen_spec.seed, "64-bit seed (default 0)");
  gen->add_option("--entry-lo", gen_spec.entry_lo,
                  "entry range lower bound (default 0.1)");
  gen->add_option("--entry-hi", gen_spec.entry_hi,
                  "entry range upper bound (default 10)");
  gen->add_flag("--metzler", gen_metzler, "draw a (possibly negative) diagonal");
  gen->add_option("--diag-lo", gen_diag_lo,
                  "diagonal range lower bound (default -2)");
  gen->add_option("--diag-hi", gen_diag_hi,
                  "diagonal range upper bound (default 2)");
  gen->add_flag("--coordinate", gen_coordinate,
                "emit coordinate instead of array format");
  gen->add_option("--out", gen_out, "write to this file instead of stdout");
  gen->add_option("--config", gen_config,
                  "read the instance spec from a JSON file");
  gen->callback([&] {
    specrad::InstanceSpec spec = gen_spec;
    if (!gen_config.empty()) {
      spec = specrad::instance_spec_from_json(
          json::parse(read_file(gen_config), nullptr, true, true));
    } else {
      if (spec.n == 0) {
        throw specrad::Error(specrad::ErrorCode::InvalidArgument,
                             "gen: --n is required unless --config is given");
      }
      if (gen_metzler) spec.metzler_diag_range = {gen_diag_lo, gen_diag_hi};
    }
    const specrad::Matrix m = specrad::gen_instance(spec);
    const std::string text = gen_coordinate
                                 ? specrad::emit_matrix_market_coordinate(m)
                                 : specrad::emit_matrix_market_array(m);
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      write_file(gen_out, text);
    }
  });

  // compare ------------------------------------------------------------
  std::string compare_file, compare_format;
  double compare_tol = 1e-12;
  auto* compare = app.add_subcommand(
      "compare", "objective values at the Perron data");
  compare->fallthrough();
  compare->add_option("file", compare_file, "matrix file")->required();
  compare->add_option("--format", compare_format, "input format")
      ->check(CLI::IsMember({"csv", "array", "coordinate"}));
  compare->add_option("--tol", compare_tol,
                      "Perron residual tolerance (default 1e-12)");
  compare->callback([&] {
    const specrad::Matrix m = load_matrix(compare_file, compare_format);
    const specrad::Report report =
        specrad::compare_at_perron(m, compare_tol);
    if (flags.json) {
      std::cout << specrad::write_report(report);
      return;
    }
    std::printf("%-20s %s\n", "method", "value");
    for (const auto& [name, r] : report.results) {
      std::printf("%-20s %s\n", name.c_str(),
                  specrad::format_double(r.value).c_str());
    }
    std::printf("%-20s %s\n", "agreement",
                specrad::format_double(report.agreement).c_str());
  });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const specrad::Error& e) {
    report_error(e, flags);
    return specrad::exit_code_for(e.code());
  } catch (const json::exception& e) {
    std::cerr << "specrad: " << e.what() << "\n";
    return 2;
  }
}
