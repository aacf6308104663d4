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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"

namespace gcsg {
namespace {

TEST(Bench, PathsHaveWidthOne) {
  const BenchConfig config =
      parse_bench_config(R"({"families": [{"family": "path", "sizes": [100, 200, 400, 800]}],
                             "methods": ["treedp"], "seed": 3})");
  const auto rows = run_bench(config);
  ASSERT_EQ(rows.size(), 4u);
  for (const BenchRow& row : rows) {
    EXPECT_EQ(row.width, 1u);
    EXPECT_EQ(row.e, row.n - 1);
  }
}

TEST(Bench, TriangleAllMethods) {
  BenchConfig config;
  config.families.push_back({"problem", {}, {}, GCSG_TEST_DATA_DIR "/t3.json"});
  config.methods = {Method::kExhaustive, Method::kTreeDP, Method::kOracle};
  const auto rows = run_bench(config);
  ASSERT_EQ(rows.size(), 3u);
  for (const BenchRow& row : rows) EXPECT_EQ(row.value, 3);
}

TEST(Bench, EmptyFamiliesGiveHeaderOnly) {
  const auto rows = run_bench(parse_bench_config(R"({"families": []})"));
  EXPECT_EQ(bench_csv(rows), std::string(kBenchCsvHeader) + "\n");
}

// Same seed, same rows (timings aside); every method agrees per instance.
TEST(Bench, DeterministicAndMethodInvariant) {
  const char* text = R"({"families": [{"family": "tree", "sizes": [6, 8]},
                                      {"family": "cycle", "sizes": [5]},
                                      {"family": "grid", "grids": [[2, 4]]}],
                         "methods": ["exhaustive", "treedp", "oracle"],
                         "valuation": "correlation", "repetitions": 2, "seed": 9})";
  const auto a = run_bench(parse_bench_config(text));
  const auto b = run_bench(parse_bench_config(text));
  ASSERT_EQ(a.size(), 4u * 2 * 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].family, b[i].family);
    EXPECT_EQ(a[i].n, b[i].n);
    EXPECT_EQ(a[i].value, b[i].value);
    EXPECT_EQ(a[i].candidates, b[i].candidates);
    EXPECT_EQ(a[i].value, a[i - i % 3].value) << i;
  }
}

TEST(Bench, CliWritesCsv) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::run_bench_cli({"--config", GCSG_TEST_DATA_DIR "/bench_small.json"}, out, err),
            cli::kExitOk)
      << err.str();
  const std::string csv = out.str();
  EXPECT_EQ(csv.rfind(std::string(kBenchCsvHeader), 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2);
}

}  // namespace
}  // namespace gcsg
