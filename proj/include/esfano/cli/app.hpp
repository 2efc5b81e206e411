// Copyright 2026 The esfano Authors.
//
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
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esfano/cli/commands.hpp"
#include "esfano/cli/document.hpp"
#include "esfano/cli/report.hpp"
#include "esfano/errors.hpp"

namespace esfano::cli {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

// Parses argv, runs one subcommand, writes the report to `out` and
// diagnostics to `err`. Returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fano schemes of Z(E_{m-1}) and orbit-Chern invariants, in exact arithmetic", "esfano"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string field_name;
  std::uint64_t prime = 0;
  std::size_t d = 0, m = 0;
  std::uint64_t budget = fano::kDefaultSubspaceBudget;
  std::uint32_t degree = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string input;
  std::vector<std::size_t> chart;

  auto add_common = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Emit the report as JSON"); };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_name, "Q, Fp (with --prime) or F<p>");
    sub->add_option("--prime", prime, "Prime modulus for Fp");
  };

  auto* classify = app.add_subcommand("classify", "Decide Fano membership of a plane matrix");
  classify->add_option("input", input, "Matrix document (default: stdin)");
  add_field(classify);
  add_common(classify);

  auto* equations = app.add_subcommand("equations", "Chart equations of the Fano scheme");
  equations->add_option("--d", d, "Plane dimension")->required();
  equations->add_option("--m", m, "Number of coordinates")->required();
  equations->add_option("--chart", chart, "Avoided columns, 1-based (default: the last m-d)")->delimiter(',');
  add_field(equations);
  add_common(equations);

  auto* isolated = app.add_subcommand("isolated", "List the isolated points for m = 2d");
  isolated->add_option("--d", d, "Half of m")->required();
  add_field(isolated);
  add_common(isolated);

  auto* brute = app.add_subcommand("brute", "Enumerate all members over F_p");
  brute->add_option("--d", d)->required();
  brute->add_option("--m", m)->required();
  brute->add_option("--prime", prime)->required();
  brute->add_option("--budget", budget, "Maximum number of subspaces");
  add_common(brute);

  auto* xcheck = app.add_subcommand("xcheck", "Cross-check classify against the direct test over F_p");
  xcheck->add_option("--d", d)->required();
  xcheck->add_option("--m", m)->required();
  xcheck->add_option("--prime", prime)->required();
  xcheck->add_option("--budget", budget, "Maximum number of subspaces");
  xcheck->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  add_common(xcheck);

  auto* invariants = app.add_subcommand("invariants", "Run an invariants scenario");
  invariants->add_option("scenario", input, "Scenario file or built-in: z2-example, pm-identity, swap, s3")
      ->required();
  invariants->add_option("--degree", degree, "Override the scenario's degree bound");
  invariants->add_option("--seed", seed, "Seed for z2-example's random trials");
  add_common(invariants);

  auto* reciprocals = app.add_subcommand("reciprocals", "Relations among reciprocals of linear forms (one per row)");
  reciprocals->add_option("input", input, "Forms document (default: stdin)");
  add_field(reciprocals);
  add_common(reciprocals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    FieldDescriptor field;
    if (!field_name.empty())
      field = FieldDescriptor::parse(field_name, prime);
    else if (prime != 0)
      field = FieldDescriptor::parse("Fp", prime);

    Report report;
    if (*classify) {
      report = cmd_classify(parse_matrix_document(read_input(input, in), field));
    } else if (*equations) {
      report = cmd_equations(d, m, chart, field);
    } else if (*isolated) {
      report = cmd_isolated(d, field);
    } else if (*brute) {
      report = cmd_brute(d, m, prime, budget);
    } else if (*xcheck) {
      report = cmd_xcheck(d, m, prime, budget, workers);
    } else if (*invariants) {
      if (input == "z2-example") {
        report = cmd_z2_example(seed);
      } else {
        const char* builtin = builtin_scenario(input);
        Scenario s = parse_scenario(builtin ? std::string(builtin) : read_input(input, in));
        if (invariants->count("--degree") > 0) s.degree = degree;
        report = cmd_invariants(s, input);
      }
    } else if (*reciprocals) {
      report = cmd_reciprocals(parse_matrix_document(read_input(input, in), field));
    }
    out << (as_json ? report.to_json() : report.to_text());
    return report.status;
  } catch (const Error& e) {
    err << "esfano: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace esfano::cli
