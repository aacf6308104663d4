// Copyright 2026 The gcsg Authors
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcsg/bench.hpp"
#include "gcsg/error.hpp"
#include "gcsg/io.hpp"
#include "gcsg/solvers.hpp"
#include "gcsg/valuation.hpp"

namespace gcsg::cli {
namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooLarge:
      return kExitTooLarge;
    case ErrorCode::kInternal:
    case ErrorCode::kMissingChildEntry:
    case ErrorCode::kMissingWitness:
      return kExitInternal;
    default:
      return kExitInvalid;
  }
}

// CLI11 parses argv-style input in reverse order.
std::vector<std::string> reversed(const std::vector<std::string>& args) {
  return {args.rbegin(), args.rend()};
}

json node_list(const NodeSet& s) {
  json out = json::array();
  for (NodeId id : s) out.push_back(id);
  return out;
}

std::string idm_report(const IdmReport& report) {
  json doc;
  doc["idm"] = report.pass();
  doc["checks"] = report.checks;
  if (report.violation) {
    const IdmViolation& v = *report.violation;
    doc["violation"] = {{"i", v.i},
                        {"j", v.j},
                        {"coalition", node_list(v.coalition)},
                        {"marginal", v.lhs},
                        {"marginal_with_j", v.rhs}};
  } else {
    doc["violation"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

// Writes to `path` when set, otherwise to `out`.
bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph coalition structure generation", "gcsg"};
  std::string graph_path;
  std::string method_name = "treedp";
  std::string decomposition = "minfill";
  std::string separator_name = "greedy";
  std::string output;
  bool split = false;
  bool idm_only = false;
  bool stats = false;
  app.add_option("--graph", graph_path, "Problem file (JSON)")->required();
  app.add_option("--method", method_name, "exhaustive, treedp or oracle")
      ->check(CLI::IsMember({"exhaustive", "treedp", "oracle"}));
  app.add_option("--decomposition", decomposition,
                 "Decomposition file, or minfill / separator to build one");
  app.add_option("--separator", separator_name, "Separator finder for --decomposition separator")
      ->check(CLI::IsMember({"grid", "greedy"}));
  app.add_flag("--split-connected", split, "Split blocks into connected pieces");
  app.add_flag("--check-idm", idm_only, "Check independence of disconnected members and exit");
  app.add_option("--output", output, "Output path (default: standard output)");
  app.add_flag("--stats", stats, "Include solver statistics");

  try {
    app.parse(reversed(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    const Problem problem = parse_problem(read_text_file(graph_path));
    const Valuation valuation(problem.graph, problem.valuation);

    if (idm_only) {
      const IdmReport report = check_idm(problem.graph, valuation);
      return emit(idm_report(report), output, out, err) ? kExitOk : kExitInvalid;
    }

    SolveOptions options;
    options.method = *parse_method(method_name);
    options.split_connected = split;
    options.grid = problem.grid;
    options.separator = separator_name == "grid" ? SeparatorKind::kGrid : SeparatorKind::kGreedy;
    if (decomposition == "minfill") {
      options.source = DecompositionSource::kMinFill;
    } else if (decomposition == "separator") {
      options.source = DecompositionSource::kSeparator;
    } else {
      options.decomposition = parse_decomposition(read_text_file(decomposition));
    }

    const SolveResult result = solve(problem.graph, valuation, options);
    return emit(serialize_result(result, stats), output, out, err) ? kExitOk : kExitInvalid;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int run_bench_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benchmark harness for the gcsg solvers", "gcsg-bench"};
  std::string config_path;
  std::string output;
  app.add_option("--config", config_path, "Benchmark configuration (JSON)")->required();
  app.add_option("--output", output, "CSV output path (default: standard output)");
  try {
    app.parse(reversed(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  try {
    const BenchConfig config = parse_bench_config(read_text_file(config_path));
    return emit(bench_csv(run_bench(config)), output, out, err) ? kExitOk : kExitInvalid;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace gcsg::cli
