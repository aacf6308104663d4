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

#include "gcsg/bench.hpp"

#include <cstdio>
#include <functional>
#include <random>

#include "json.hpp"

#include "gcsg/error.hpp"
#include "gcsg/generators.hpp"
#include "gcsg/io.hpp"

namespace gcsg {
namespace {

using nlohmann::json;

struct Instance {
  std::string family;
  Graph graph;
  ValuationSpec valuation;
};

// Weights and labels as the valuation needs them.
Graph decorate_for(const Graph& g, ValuationKind kind, std::mt19937_64& rng, const BenchConfig& c) {
  switch (kind) {
    case ValuationKind::kEdgeSum:
      return with_random_weights(g, rng, c.weight_min, c.weight_max);
    case ValuationKind::kCorrelation:
      return with_random_labels(g, rng);
    default:
      return g;
  }
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t family, std::size_t size,
                             std::size_t repetition) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(family), static_cast<std::uint32_t>(size),
                    static_cast<std::uint32_t>(repetition)};
  return std::mt19937_64(seq);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace

BenchConfig parse_bench_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed JSON: ") + e.what());
  }
  BenchConfig config;
  try {
    for (const json& f : doc.at("families")) {
      BenchFamily family;
      family.family = f.at("family").get<std::string>();
      if (f.contains("sizes")) family.sizes = f.at("sizes").get<std::vector<std::size_t>>();
      if (f.contains("grids")) {
        for (const json& shape : f.at("grids")) {
          family.grids.push_back({shape.at(0).get<std::size_t>(), shape.at(1).get<std::size_t>()});
        }
      }
      if (f.contains("path")) family.path = f.at("path").get<std::string>();
      config.families.push_back(std::move(family));
    }
    if (doc.contains("valuation")) {
      const auto kind = parse_valuation_kind(doc.at("valuation").get<std::string>());
      if (!kind || *kind == ValuationKind::kTable) {
        throw Error(ErrorCode::kParseError, "valuation: unsupported benchmark valuation");
      }
      config.valuation = *kind;
    }
    if (doc.contains("methods")) {
      config.methods.clear();
      for (const json& m : doc.at("methods")) {
        const auto method = parse_method(m.get<std::string>());
        if (!method) throw Error(ErrorCode::kParseError, "methods: unknown method " + m.dump());
        config.methods.push_back(*method);
      }
    }
    if (doc.contains("repetitions")) config.repetitions = doc.at("repetitions").get<std::size_t>();
    if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("weights")) {
      config.weight_min = doc.at("weights").at(0).get<int>();
      config.weight_max = doc.at("weights").at(1).get<int>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("benchmark config: ") + e.what());
  }
  return config;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (std::size_t f = 0; f < config.families.size(); ++f) {
    const BenchFamily& family = config.families[f];

    // (graph builder, size key) per instance of this family
    std::vector<std::pair<std::size_t, std::function<Graph(std::mt19937_64&)>>> shapes;
    if (family.family == "path") {
      for (std::size_t n : family.sizes) shapes.emplace_back(n, [n](auto&) { return path_graph(n); });
    } else if (family.family == "cycle") {
      for (std::size_t n : family.sizes) shapes.emplace_back(n, [n](auto&) { return cycle_graph(n); });
    } else if (family.family == "star") {
      for (std::size_t n : family.sizes) shapes.emplace_back(n, [n](auto&) { return star_graph(n); });
    } else if (family.family == "tree") {
      for (std::size_t n : family.sizes) {
        shapes.emplace_back(n, [n](std::mt19937_64& rng) { return random_tree(n, rng); });
      }
    } else if (family.family == "grid") {
      for (const GridShape& s : family.grids) {
        shapes.emplace_back(s.rows * 100000 + s.cols,
                            [s](auto&) { return grid_graph(s.rows, s.cols); });
      }
    } else if (family.family != "problem") {
      throw Error(ErrorCode::kValidationError, "unknown benchmark family \"" + family.family + "\"");
    }

    std::vector<Problem> loaded;
    if (family.family == "problem") loaded.push_back(parse_problem(read_text_file(family.path)));

    const std::size_t instances = family.family == "problem" ? 1 : shapes.size();
    for (std::size_t s = 0; s < instances; ++s) {
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        Graph graph;
        ValuationSpec spec{config.valuation, {}};
        if (family.family == "problem") {
          graph = loaded.front().graph;
          spec = loaded.front().valuation;
        } else {
          std::mt19937_64 rng = instance_rng(config.seed, f, shapes[s].first, rep);
          graph = decorate_for(shapes[s].second(rng), config.valuation, rng, config);
        }
        const Valuation valuation(graph, spec);
        const std::size_t instance_width = graph.node_count() == 0 ? 0 : width(min_fill_decompose(graph));
        for (Method method : config.methods) {
          SolveOptions options;
          options.method = method;
          const SolveResult result = solve(graph, valuation, options);
          rows.push_back({family.family, graph.node_count(), graph.edge_count(), instance_width,
                          method, result.value, result.stats.elapsed_ms, result.stats.candidates});
        }
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out(kBenchCsvHeader);
  out += "\n";
  for (const BenchRow& r : rows) {
    out += r.family + "," + std::to_string(r.n) + "," + std::to_string(r.e) + "," +
           std::to_string(r.width) + "," + std::string(to_string(r.method)) + "," +
           format_number(r.value) + "," + format_number(r.elapsed_ms) + "," +
           std::to_string(r.candidates) + "\n";
  }
  return out;
}

}  // namespace gcsg
