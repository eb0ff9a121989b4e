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
#include <filesystem>
#include <numbers>

#include "paritysynth/io.hpp"
#include "paritysynth/random.hpp"
#include "paritysynth/semantics.hpp"
#include "paritysynth/synth_constrained.hpp"
#include "test_util.hpp"

using namespace paritysynth;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = PARITYSYNTH_SOURCE_DIR;

// Runs `parse` on `text` and returns the ParseError it must throw.
template <typename F>
ParseError parse_failure(F parse, std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError for: " << text);
  throw;
}

bool same_gates(const Circuit& a, const Circuit& b) {
  if (a.num_qubits() != b.num_qubits() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Gate& x = a.gates()[i];
    const Gate& y = b.gates()[i];
    if (x.kind != y.kind || x.q0 != y.q0 || (x.is_two_qubit() && x.q1 != y.q1)) return false;
    if (std::abs(x.angle - y.angle) > 1e-12) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("QASM: minimal program") {
  const Circuit c = parse_qasm("OPENQASM 2.0; qreg q[2]; cx q[0],q[1];");
  CHECK(c.num_qubits() == 2);
  REQUIRE(c.size() == 1);
  CHECK(c.gates()[0] == Gate::cnot(0, 1));
}

TEST_CASE("QASM: angles") {
  const Circuit c = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nrz(pi/4) q[0];\nrz(0.5*pi) q[0];\nrz(-3*pi/4) q[0];\nrz(1e-3) q[0];");
  REQUIRE(c.size() == 4);
  CHECK(c.gates()[0].angle == Catch::Approx(std::numbers::pi / 4));
  CHECK(c.gates()[1].angle == Catch::Approx(std::numbers::pi / 2));
  CHECK(c.gates()[2].angle == Catch::Approx(-3 * std::numbers::pi / 4));
  CHECK(c.gates()[3].angle == Catch::Approx(1e-3));
}

TEST_CASE("QASM: unknown gate is named with its position") {
  const ParseError e = parse_failure(parse_qasm, "OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];\n");
  CHECK(e.span().line == 3);
  CHECK(e.span().column == 1);
  CHECK(e.span().offset == 25);
  CHECK(e.message().find("ccx") != std::string::npos);
  CHECK_FALSE(e.expected().empty());
}

TEST_CASE("QASM: index out of range points at the index") {
  const ParseError e = parse_failure(parse_qasm, "OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[2];");
  CHECK(e.span().line == 3);
  CHECK(e.span().column == 11);
}

TEST_CASE("QASM: emit an empty circuit") {
  CHECK(emit_qasm(Circuit(3)) == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n");
}

TEST_CASE("QASM: SWAP is emitted as swap") {
  Circuit c(2);
  c.swap(0, 1);
  CHECK(emit_qasm(c).find("swap q[0],q[1];") != std::string::npos);
}

TEST_CASE("QASM round-trip on synthesized circuits") {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(7);
    const std::size_t max_terms = std::min<std::size_t>(20, (std::size_t{1} << n) - 1);
    const PhasePolynomial p = random_polynomial(n, 1 + rng.below(max_terms), rng);
    const CouplingGraph g = line_graph(n);
    for (auto s : {Strategy::Naive, Strategy::Recursive, Strategy::Steiner, Strategy::Dfs}) {
      const Circuit c = synthesize(p, s, &g).circuit;
      const Circuit back = parse_qasm(emit_qasm(c));
      CHECK(same_gates(c, back));
      CHECK(implements(back, p));
    }
    const Circuit u = random_universal_circuit(n, 3, 5, 5, rng);
    CHECK(same_gates(u, parse_qasm(emit_qasm(u))));
  }
}

TEST_CASE("Angle formatting") {
  CHECK(format_angle(0.0) == "0");
  CHECK(format_angle(std::numbers::pi) == "pi");
  CHECK(format_angle(-std::numbers::pi / 4) == "-pi/4");
  CHECK(format_angle(3 * std::numbers::pi / 8) == "3*pi/8");
  CHECK(format_angle(0.3) == "0.29999999999999999");
  CHECK(parse_angle(format_angle(0.3)) == 0.3);
  CHECK(parse_angle("-3*pi/4") == Catch::Approx(-3 * std::numbers::pi / 4));
  CHECK_THROWS_AS(parse_angle("pi pi"), ParseError);
  CHECK_THROWS_AS(parse_angle("pi/0"), ParseError);
}

TEST_CASE("Polynomial file") {
  const PhasePolynomial p = parse_phase_poly("n 3\n110 pi/4\n011 pi/2");
  CHECK(p.size() == 2);
  CHECK(p == poly(3, {{"110", std::numbers::pi / 4}, {"011", std::numbers::pi / 2}}));
  CHECK(parse_phase_poly(emit_phase_poly(p)) == p);
}

TEST_CASE("Polynomial file: duplicates merge") {
  const PhasePolynomial p = parse_phase_poly("n 2\n11 pi/4\n11 pi/4\n");
  REQUIRE(p.size() == 1);
  CHECK(p[0].angle == Angle(std::numbers::pi / 2));
}

TEST_CASE("Polynomial file: all-zero parity") {
  const ParseError e = parse_failure(parse_phase_poly, "n 2\n00 pi");
  CHECK(e.message().find("all-zero parity") != std::string::npos);
  CHECK(e.span().line == 2);
  CHECK(e.span().column == 1);
}

TEST_CASE("Polynomial file: wrong length") {
  const ParseError e = parse_failure(parse_phase_poly, "n 3\n110 pi\n11 pi\n");
  CHECK(e.span().line == 3);
}

TEST_CASE("Graph file") {
  const CouplingGraph g = parse_graph("3 2\n0 1\n1 2");
  CHECK(g == line_graph(3));
  CHECK(parse_graph(emit_graph(grid_graph(3, 3))) == grid_graph(3, 3));
  CHECK_THROWS_AS(parse_graph("4 2\n0 1\n2 3"), DisconnectedGraphError);
}

TEST_CASE("Records are single-line JSON with the fixed fields first") {
  Record r;
  r.instance = "i0";
  r.seed = 3;
  r.n = 4;
  r.g = 5;
  r.graph = "line:4";
  r.strategy = "dfs";
  r.cnots = 12;
  r.depth = 9;
  r.extra["cleanup"] = "linear";
  const std::string line = emit_record(r);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(line.rfind("{\"instance\":\"i0\",\"seed\":3,\"n\":4,\"g\":5,\"graph\":\"line:4\",\"strategy\":\"dfs\"", 0) == 0);
  CHECK(line.find("\"alpha\":null") != std::string::npos);
  const auto parsed = nlohmann::json::parse(line);
  CHECK(parsed["violations"] == 0);
  CHECK(parsed["cleanup"] == "linear");
  CHECK(format_table({r}).find("line:4") != std::string::npos);
}

TEST_CASE("Every data artifact round-trips") {
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(kSource / "data")) {
    const std::string text = read_file(entry.path().string());
    const std::string ext = entry.path().extension().string();
    INFO(entry.path().string());
    if (ext == ".qasm") {
      const Circuit c = parse_qasm(text);
      CHECK(same_gates(parse_qasm(emit_qasm(c)), c));
      ++seen;
    } else if (ext == ".poly") {
      const PhasePolynomial p = parse_phase_poly(text);
      CHECK(parse_phase_poly(emit_phase_poly(p)) == p);
      ++seen;
    } else if (ext == ".graph") {
      const CouplingGraph g = parse_graph(text);
      CHECK(parse_graph(emit_graph(g)) == g);
      ++seen;
    }
  }
  CHECK(seen >= 8);
}

TEST_CASE("Every malformed fixture gives a positioned ParseError") {
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(kSource / "tests" / "fixtures" / "malformed")) {
    const std::string text = read_file(entry.path().string());
    const std::string ext = entry.path().extension().string();
    INFO(entry.path().string());
    try {
      if (ext == ".qasm") {
        parse_qasm(text);
      } else if (ext == ".poly") {
        parse_phase_poly(text);
      } else {
        parse_graph(text);
      }
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.span().offset <= text.size());
      CHECK(e.span().line >= 1);
      CHECK(e.span().column >= 1);
      ++seen;
    }
  }
  CHECK(seen >= 20);
}
