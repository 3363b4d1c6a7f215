// Copyright 2026 The qgen Authors
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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgen/cli/config.hpp"
#include "qgen/cli/query.hpp"
#include "qgen/cli/table.hpp"
#include "qgen/cli/verify.hpp"
#include "qgen/error.hpp"

namespace {

using namespace qgen::cli;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct QueryFlags {
  std::map<std::string, std::string> values;
  std::vector<CLI::Option*> options;
  std::string mode = "exact";
  bool symbolic = false;
  bool poly = false;

  void attach(CLI::App* app) {
    // -h would collide with the weight parameter --h
    app->set_help_flag("--help", "print help");
    for (const auto& name : parameter_names()) {
      options.push_back(app->add_option("--" + name, values[name], "parameter " + name));
    }
    app->add_option("--mode", mode, "exact | symbolic | padic | series");
    app->add_flag("--symbolic", symbolic, "shorthand for --mode symbolic");
    app->add_flag("--poly", poly, "return the polynomial in x");
  }

  Query to_query(const std::string& family) const {
    Query q;
    q.family = family;
    q.mode = symbolic ? "symbolic" : mode;
    if (symbolic && mode != "exact" && mode != "symbolic") {
      throw UsageError("--symbolic conflicts with --mode " + mode);
    }
    q.poly = poly;
    for (const auto* opt : options) {
      if (opt->count() == 0) continue;
      const std::string name = opt->get_name().substr(2);
      q.params[name] = values.at(name);
    }
    return q;
  }
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"exact q-Euler and q-Genocchi calculator"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  std::map<std::string, QueryFlags> family_flags;
  std::map<std::string, CLI::App*> family_apps;
  for (const auto& fam : family_names()) {
    CLI::App* sub = app.add_subcommand(fam, "evaluate the " + fam + " family");
    family_flags[fam].attach(sub);
    family_apps[fam] = sub;
  }

  CLI::App* table = app.add_subcommand("table", "tabulate a family over integer ranges");
  QueryFlags table_flags;
  std::string table_family, range1, range2, format = "json", out_path;
  table->add_option("--family", table_family, "family to tabulate")->required();
  table->add_option("--range", range1, "name=a..b")->required();
  table->add_option("--range2", range2, "second range, inner loop");
  table->add_option("--format", format, "json | csv");
  table->add_option("--out", out_path, "output path (default stdout)");
  table_flags.attach(table);

  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  std::string suite;
  long padic_level = 0;
  std::string report_path;
  verify->add_option("suite", suite, "qcore | classical | padic | qeuler | qgenocchi | limits | all")
      ->required();
  verify->add_option("--padic-level", padic_level, "highest level N of the p-adic grids");
  verify->add_option("--report", report_path, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Config config = load_config();

  for (const auto& [fam, sub] : family_apps) {
    if (!sub->parsed()) continue;
    Json out = run_query(family_flags.at(fam).to_query(fam), config);
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  if (table->parsed()) {
    TableSpec spec;
    spec.base = table_flags.to_query(table_family);
    spec.format = format;
    spec.ranges.push_back(Range::parse(range1));
    if (!range2.empty()) spec.ranges.push_back(Range::parse(range2));
    write_output(render_table(spec, config), out_path);
    return 0;
  }

  VerifyConfig vc;
  vc.p = config.p;
  vc.term_budget = config.term_budget;
  vc.cesaro_M = config.M;
  vc.cesaro_tolerance = config.cesaro_tolerance;
  if (verify->count("--padic-level") > 0) vc.padic_level = padic_level;
  if (vc.padic_level < 1) throw UsageError("--padic-level must be >= 1");
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  auto results = run_suite(suite, vc);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << format_line(r) << '\n';
    ok = ok && r.passed();
  }
  std::cout << (ok ? "all properties passed" : "some properties FAILED") << '\n';
  if (!report_path.empty()) write_output(report_json(results).dump(2) + "\n", report_path);
  return ok ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "qgen: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qgen: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qgen::DomainError& e) {
    std::cerr << "qgen: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "qgen: " << e.what() << '\n';
    return kExitDomain;
  }
}
