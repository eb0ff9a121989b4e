// Copyright 2026 The paritysynth Authors
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

#include <catch_amalgamated.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>

#include "paritysynth/cli.hpp"
#include "paritysynth/io.hpp"
#include "paritysynth/semantics.hpp"
#include "test_util.hpp"

using namespace paritysynth;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const fs::path kSource = PARITYSYNTH_SOURCE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_config(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

// Writes `text` to a fresh file under the temp directory.
std::string temp_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "paritysynth_test_cli";
  fs::create_directories(dir);
  const std::string path = (dir / name).string();
  write_file(path, text);
  return path;
}

std::string data(const std::string& name) { return (kSource / "data" / name).string(); }

// Record stream with every timing field removed.
std::string without_timing(const std::string& text) {
  std::string out;
  for (json j : lines(text)) {
    j.erase("wall_time_ms");
    j.erase("mean_wall_time_ms");
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("synth naive reports the exact ladder count") {
  RunConfig c;
  c.command = "synth";
  c.inputs = {data("example3.poly")};
  c.strategy = "naive";
  const Run r = run_config(c);
  REQUIRE(r.code == kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0].contains("config"));
  // Weights 2, 3 and 3.
  CHECK(out[1]["cnots"] == 2 * (1 + 2 + 2));
  CHECK(out[1]["g"] == 3);
}

TEST_CASE("synth dfs on a line verifies with no violations") {
  RunConfig c;
  c.command = "synth";
  c.inputs = {data("all7.poly")};
  c.graph = "line:3";
  c.verify = true;
  c.out = temp_file("all7.qasm", "");
  const Run r = run_config(c);
  REQUIRE(r.code == kExitOk);
  const auto out = lines(r.out);
  CHECK(out[1]["violations"] == 0);
  CHECK(out[1]["verified"] == true);
  const Circuit circuit = parse_qasm(read_file(c.out));
  CHECK(implements(circuit, parse_phase_poly(read_file(data("all7.poly")))));
}

TEST_CASE("synth on the empty polynomial gives an empty circuit") {
  RunConfig c;
  c.command = "synth";
  c.inputs = {data("empty.poly")};
  c.out = temp_file("empty.qasm", "");
  REQUIRE(run_config(c).code == kExitOk);
  CHECK(parse_qasm(read_file(c.out)).empty());
}

TEST_CASE("synth a random instance") {
  RunConfig c;
  c.command = "synth";
  c.n_values = {6};
  c.g_values = {20};
  c.graph = "grid";
  c.verify = true;
  const Run r = run_config(c);
  REQUIRE(r.code == kExitOk);
  CHECK(lines(r.out)[1]["graph"] == "grid:3x2");
}

TEST_CASE("route reports alpha") {
  RunConfig c;
  c.command = "route";
  c.graph = "line:3";
  c.verify = true;
  c.inputs = {temp_file("adjacent.qasm", "OPENQASM 2.0;\nqreg q[3];\ncx q[0],q[1];\ncx q[1],q[2];\n")};
  Run r = run_config(c);
  REQUIRE(r.code == kExitOk);
  CHECK(lines(r.out)[1]["alpha"] == 1.0);

  c.inputs = {temp_file("far.qasm", "OPENQASM 2.0;\nqreg q[3];\ncx q[0],q[2];\n")};
  r = run_config(c);
  REQUIRE(r.code == kExitOk);
  CHECK(lines(r.out)[1]["alpha"] == 4.0);
  CHECK(lines(r.out)[1]["swaps"] == 1);
}

TEST_CASE("route verifies circuits with Hadamards") {
  RunConfig c;
  c.command = "route";
  c.graph = "line";
  c.verify = true;
  c.inputs = {data("toffoli_phase.qasm")};
  const Run r = run_config(c);
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out)[1]["verified"] == true);
}

TEST_CASE("verify") {
  RunConfig c;
  c.command = "verify";
  c.inputs = {data("toffoli_phase.qasm"), data("toffoli_phase.qasm")};
  CHECK(run_config(c).code == kExitOk);

  const std::string other = temp_file("other.qasm", "OPENQASM 2.0;\nqreg q[4];\ncx q[0],q[1];\n");
  c.inputs = {other, data("example3.poly")};
  CHECK(run_config(c).code == kExitVerifyFailed);

  RunConfig s;
  s.command = "synth";
  s.inputs = {data("example3.poly")};
  s.strategy = "recursive";
  s.out = temp_file("example3.qasm", "");
  REQUIRE(run_config(s).code == kExitOk);
  c.inputs = {s.out, data("example3.poly")};
  CHECK(run_config(c).code == kExitOk);
  // Unconstrained output is not line-conforming here.
  c.graph = "line:4";
  CHECK(run_config(c).code == kExitVerifyFailed);
}

TEST_CASE("Input errors exit with 2") {
  RunConfig c;
  c.command = "synth";
  c.inputs = {(kSource / "tests" / "fixtures" / "malformed" / "zero_parity.poly").string()};
  Run r = run_config(c);
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("zero_parity.poly:") != std::string::npos);

  c.inputs = {data("example3.poly")};
  c.graph = "line:5";
  CHECK(run_config(c).code == kExitInputError);

  c.graph = "";
  c.strategy = "gray";
  CHECK(run_config(c).code == kExitInputError);

  RunConfig unknown;
  unknown.command = "frobnicate";
  CHECK(run_config(unknown).code == kExitInputError);

  RunConfig missing;
  missing.command = "synth";
  missing.inputs = {"/nonexistent/file.poly"};
  CHECK(run_config(missing).code == kExitInputError);

  RunConfig compare;
  compare.command = "compare";
  compare.n_values = {4};
  compare.g_values = {4};
  compare.strategy = "recursive";
  CHECK(run_config(compare).code == kExitInputError);
}

TEST_CASE("compare emits paired records and summaries") {
  RunConfig c;
  c.command = "compare";
  c.graph = "line";
  c.n_values = {8};
  c.g_values = {16};
  c.seeds = 4;
  c.verify = true;
  const Run r = run_config(c);
  REQUIRE(r.code == kExitOk);
  const auto out = lines(r.out);
  // config, 2 records per instance, one cell summary, one overall summary.
  REQUIRE(out.size() == 1 + 8 + 2);
  CHECK(out[1]["strategy"] == "recursive+swap");
  CHECK(out[2]["strategy"] == "dfs");
  CHECK(out[1]["instance"] == out[2]["instance"]);
  CHECK(out.back()["summary"] == "compare");
  CHECK(out.back()["instances"] == 4);
}

TEST_CASE("Records are independent of the worker count") {
  RunConfig c;
  c.command = "bench";
  c.graph = "line,grid";
  c.strategy = "all";
  c.n_values = {5, 8};
  c.g_values = {4, 12};
  c.seeds = 3;
  c.threads = 1;
  const Run one = run_config(c);
  c.threads = 4;
  const Run four = run_config(c);
  REQUIRE(one.code == kExitOk);
  REQUIRE(four.code == kExitOk);
  CHECK(without_timing(one.out) == without_timing(four.out));
}

TEST_CASE("PARITYSYNTH_THREADS") {
  RunConfig c;
  ::setenv("PARITYSYNTH_THREADS", "3", 1);
  CHECK(worker_count(c) == 3);
  c.threads = 2;
  CHECK(worker_count(c) == 2);
  c.threads = 0;
  ::setenv("PARITYSYNTH_THREADS", "zero", 1);
  CHECK_THROWS_AS(worker_count(c), Error);
  ::unsetenv("PARITYSYNTH_THREADS");
  CHECK(worker_count(c) >= 1);
}

TEST_CASE("parallel_for runs each index once and rethrows") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw DimensionError("boom");
                               }),
                  DimensionError);
}

TEST_CASE("Power-law fit recovers exact exponents") {
  std::vector<double> x{2, 4, 8, 16};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 1.5));
  const ScalingFit fit = fit_power_law(x, y);
  CHECK(fit.points == 4);
  CHECK(fit.exponent == Catch::Approx(1.5));
  CHECK(std::exp(fit.intercept) == Catch::Approx(3.0));
  CHECK(fit_power_law({0, 1}, {1, 0}).points == 0);
}

TEST_CASE("Instance seeds differ across cells and indices") {
  std::set<std::uint64_t> seen;
  for (std::size_t n : {8, 16}) {
    for (std::size_t g : {16, 32, 64}) {
      for (std::size_t i = 0; i < 20; ++i) seen.insert(instance_seed(1, n, g, i));
    }
  }
  CHECK(seen.size() == 120);
  CHECK(instance_seed(1, 8, 16, 0) == instance_seed(1, 8, 16, 0));
  CHECK(instance_seed(1, 8, 16, 0) != instance_seed(2, 8, 16, 0));
}

TEST_CASE("resolve_graph") {
  CHECK(resolve_graph("line:4", 4) == line_graph(4));
  CHECK(resolve_graph("grid", 9) == grid_graph(3, 3));
  CHECK(resolve_graph(data("line3.graph"), 3) == line_graph(3));
  CHECK_THROWS_AS(resolve_graph("line:4", 5), DimensionError);
  CHECK_THROWS_AS(resolve_graph("", 5), UsageError);
}
