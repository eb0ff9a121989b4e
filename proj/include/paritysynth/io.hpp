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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "paritysynth/core.hpp"
#include "paritysynth/errors.hpp"
#include "paritysynth/graph.hpp"

namespace paritysynth {

/// 1-based line and column, 0-based byte offset.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

/**
 * OpenQASM 2.0 subset:
 *
 *   OPENQASM 2.0;                  (optional)
 *   include "qelib1.inc";          (optional)
 *   qreg q[n];                     (exactly one, before any gate)
 *   cx q[a],q[b];  rz(angle) q[a];  h q[a];  swap q[a],q[b];
 *
 * angle := [+|-] factor {(*|/) factor}, factor := number | pi.
 * Comments run from "//" to end of line.
 */
Circuit parse_qasm(std::string_view text);
std::string emit_qasm(const Circuit& c);

/// Angle expression on its own, e.g. "-3*pi/4". Throws ParseError.
double parse_angle(std::string_view text);
/// Exact multiple of pi/k (k <= 64) when there is one, else %.17g.
std::string format_angle(double radians);

/**
 * Phase polynomial file: first line "n <qubits>", then one "<bits> <angle>"
 * per term where character i of <bits> is qubit i. Blank lines and '#'
 * comments are ignored; duplicate parities are merged.
 */
PhasePolynomial parse_phase_poly(std::string_view text);
std::string emit_phase_poly(const PhasePolynomial& p);

/// Graph file: first line "<n> <m>", then m lines "<u> <v>". Throws
/// ParseError on malformed input and DisconnectedGraphError when the edges do
/// not connect all vertices.
CouplingGraph parse_graph(std::string_view text, std::string name = "");
std::string emit_graph(const CouplingGraph& g);

/// One line of the report stream.
struct Record {
  std::string instance;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t g = 0;
  std::string graph;
  std::string strategy;
  std::size_t cnots = 0;
  std::size_t depth = 0;
  std::optional<double> alpha;
  std::size_t violations = 0;
  double wall_time_ms = 0.0;
  /// Extra command-specific fields, appended after the fixed ones.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const Record& r);
/// Single-line JSON object.
std::string emit_record(const Record& r);
/// Aligned text table, one row per record.
std::string format_table(const std::vector<Record>& records);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace paritysynth
