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

#include "paritysynth/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace paritysynth {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string render(const SourceSpan& span, const std::string& message, const std::vector<std::string>& expected) {
  std::string out = std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
  if (!expected.empty()) out += " (expected " + join_expected(expected) + ")";
  return out;
}

}  // namespace

ParseError::ParseError(SourceSpan span, std::string message, std::vector<std::string> expected)
    : Error(render(span, message, expected)),
      span_(span),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, String, Symbol, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Newline:
      return "end of line";
    default:
      return "'" + t.text + "'";
  }
}

// Hand-rolled lexer. In line mode newlines are tokens and '#' starts a
// comment; otherwise newlines are blanks and "//" starts a comment.
class Lexer {
 public:
  Lexer(std::string_view text, bool line_mode) : text_(text), line_mode_(line_mode) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(std::string_view symbol) {
    if ((current_.kind == Tok::Symbol || current_.kind == Tok::Ident) && current_.text == symbol) {
      advance();
      return true;
    }
    return false;
  }

  Token expect(std::string_view symbol) {
    if ((current_.kind == Tok::Symbol || current_.kind == Tok::Ident) && current_.text == symbol) return take();
    throw ParseError(current_.span, "unexpected " + describe(current_), {"'" + std::string(symbol) + "'"});
  }

  Token expect_kind(Tok kind, const std::string& what) {
    if (current_.kind == kind) return take();
    throw ParseError(current_.span, "unexpected " + describe(current_), {what});
  }

 private:
  SourceSpan here() const { return {line_, column_, pos_}; }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n' && line_mode_) return;
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else if (!line_mode_ && c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (line_mode_ && c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else {
        return;
      }
    }
  }

  void advance() {
    skip_blanks();
    current_ = Token{};
    current_.span = here();
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    auto is_digit = [](char ch) { return ch >= '0' && ch <= '9'; };
    if (c == '\n') {
      bump();
      current_.kind = Tok::Newline;
      current_.text = "\n";
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) bump();
      current_.kind = Tok::Ident;
    } else if (is_digit(c) || (c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
      while (pos_ < text_.size() && (is_digit(text_[pos_]) || text_[pos_] == '.')) bump();
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t look = pos_ + 1;
        if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
        if (look < text_.size() && is_digit(text_[look])) {
          while (pos_ < look) bump();
          while (pos_ < text_.size() && is_digit(text_[pos_])) bump();
        }
      }
      current_.kind = Tok::Number;
    } else if (c == '"') {
      bump();
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') bump();
      if (pos_ >= text_.size() || text_[pos_] != '"') throw ParseError(current_.span, "unterminated string");
      bump();
      current_.kind = Tok::String;
    } else {
      bump();
      current_.kind = Tok::Symbol;
    }
    current_.text = std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  bool line_mode_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

double number_value(const Token& t) {
  double v = 0.0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError(t.span, "malformed number '" + t.text + "'");
  return v;
}

std::size_t index_value(const Token& t) {
  std::size_t v = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError(t.span, "expected a non-negative integer, got '" + t.text + "'");
  return v;
}

double parse_factor(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind == Tok::Number) return number_value(lx.take());
  if (t.kind == Tok::Ident && t.text == "pi") {
    lx.take();
    return std::numbers::pi;
  }
  throw ParseError(t.span, "malformed angle at " + describe(t), {"number", "'pi'"});
}

double parse_angle_expr(Lexer& lx) {
  double sign = 1.0;
  if (lx.accept("-")) {
    sign = -1.0;
  } else {
    lx.accept("+");
  }
  double value = parse_factor(lx);
  while (true) {
    if (lx.accept("*")) {
      value *= parse_factor(lx);
    } else if (lx.peek().kind == Tok::Symbol && lx.peek().text == "/") {
      const Token slash = lx.take();
      const double d = parse_factor(lx);
      if (d == 0.0) throw ParseError(slash.span, "division by zero in angle");
      value /= d;
    } else {
      break;
    }
  }
  return sign * value;
}

Qubit parse_operand(Lexer& lx, const std::string& reg, std::size_t n) {
  const Token name = lx.expect_kind(Tok::Ident, "register name");
  if (name.text != reg) throw ParseError(name.span, "unknown register '" + name.text + "'", {"'" + reg + "'"});
  lx.expect("[");
  const Token idx = lx.expect_kind(Tok::Number, "qubit index");
  const std::size_t q = index_value(idx);
  if (q >= n) {
    throw ParseError(idx.span, "qubit index " + idx.text + " out of range for " + reg + "[" + std::to_string(n) + "]");
  }
  lx.expect("]");
  return q;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Lexer lx(text, false);
  if (lx.accept("OPENQASM")) {
    const Token version = lx.expect_kind(Tok::Number, "version");
    if (version.text != "2.0" && version.text != "2") {
      throw ParseError(version.span, "unsupported OPENQASM version '" + version.text + "'", {"'2.0'"});
    }
    lx.expect(";");
  }
  if (lx.accept("include")) {
    lx.expect_kind(Tok::String, "file name");
    lx.expect(";");
  }
  const Token qreg = lx.peek();
  if (!(qreg.kind == Tok::Ident && qreg.text == "qreg")) {
    throw ParseError(qreg.span, "unexpected " + describe(qreg) + " before the register declaration", {"'qreg'"});
  }
  lx.take();
  const std::string reg = lx.expect_kind(Tok::Ident, "register name").text;
  lx.expect("[");
  const std::size_t n = index_value(lx.expect_kind(Tok::Number, "register size"));
  lx.expect("]");
  lx.expect(";");

  Circuit c(n);
  while (lx.peek().kind != Tok::End) {
    const Token head = lx.take();
    if (head.kind != Tok::Ident) {
      throw ParseError(head.span, "unexpected " + describe(head), {"gate name"});
    }
    if (head.text == "cx" || head.text == "swap") {
      const Qubit a = parse_operand(lx, reg, n);
      lx.expect(",");
      const Token second = lx.peek();
      const Qubit b = parse_operand(lx, reg, n);
      if (a == b) throw ParseError(second.span, "'" + head.text + "' needs two distinct qubits");
      lx.expect(";");
      if (head.text == "cx") {
        c.cnot(a, b);
      } else {
        c.swap(a, b);
      }
    } else if (head.text == "rz") {
      lx.expect("(");
      const double theta = parse_angle_expr(lx);
      lx.expect(")");
      const Qubit a = parse_operand(lx, reg, n);
      lx.expect(";");
      c.rz(theta, a);
    } else if (head.text == "h") {
      const Qubit a = parse_operand(lx, reg, n);
      lx.expect(";");
      c.h(a);
    } else if (head.text == "qreg") {
      throw ParseError(head.span, "multiple qreg declarations are not supported");
    } else {
      throw ParseError(head.span, "unknown gate '" + head.text + "'", {"'cx'", "'rz'", "'h'", "'swap'"});
    }
  }
  return c;
}

std::string format_angle(double radians) {
  if (radians == 0.0) return "0";
  for (long k = 1; k <= 64; ++k) {
    const double scaled = radians * static_cast<double>(k) / std::numbers::pi;
    const double a = std::round(scaled);
    if (a == 0.0 || std::abs(scaled - a) > 1e-12 * std::max(1.0, std::abs(scaled))) continue;
    const long num = static_cast<long>(a);
    std::string out = num < 0 ? "-" : "";
    const long mag = std::abs(num);
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "pi";
    if (k != 1) out += "/" + std::to_string(k);
    return out;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", radians);
  return buf;
}

double parse_angle(std::string_view text) {
  Lexer lx(text, false);
  const double v = parse_angle_expr(lx);
  if (lx.peek().kind != Tok::End) throw ParseError(lx.peek().span, "unexpected " + describe(lx.peek()), {"end of input"});
  return v;
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.num_qubits() << "];\n";
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::SWAP:
        out << "swap q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::RZ:
        out << "rz(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::H:
        out << "h q[" << g.q0 << "];\n";
        break;
    }
  }
  return out.str();
}

namespace {

void skip_newlines(Lexer& lx) {
  while (lx.peek().kind == Tok::Newline) lx.take();
}

void end_of_line(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind != Tok::Newline && t.kind != Tok::End) {
    throw ParseError(t.span, "unexpected " + describe(t), {"end of line"});
  }
  if (t.kind == Tok::Newline) lx.take();
}

}  // namespace

PhasePolynomial parse_phase_poly(std::string_view text) {
  Lexer lx(text, true);
  skip_newlines(lx);
  lx.expect("n");
  const std::size_t n = index_value(lx.expect_kind(Tok::Number, "qubit count"));
  end_of_line(lx);
  std::vector<ParityTerm> raw;
  while (true) {
    skip_newlines(lx);
    if (lx.peek().kind == Tok::End) break;
    const Token b = lx.expect_kind(Tok::Number, "bitstring");
    if (b.text.find_first_not_of("01") != std::string::npos) {
      throw ParseError(b.span, "malformed bitstring '" + b.text + "'", {"string of 0 and 1"});
    }
    if (b.text.size() != n) {
      throw ParseError(b.span, "bitstring '" + b.text + "' has length " + std::to_string(b.text.size()) + ", expected " +
                                   std::to_string(n));
    }
    if (b.text.find('1') == std::string::npos) throw ParseError(b.span, "all-zero parity '" + b.text + "'");
    const double theta = parse_angle_expr(lx);
    end_of_line(lx);
    raw.push_back({*BitVec::from_string(b.text), Angle(theta)});
  }
  return make_phase_polynomial(n, raw);
}

std::string emit_phase_poly(const PhasePolynomial& p) {
  std::string out = "n " + std::to_string(p.num_qubits()) + "\n";
  for (const auto& t : p.terms()) out += t.parity.to_string() + " " + format_angle(t.angle.radians()) + "\n";
  return out;
}

CouplingGraph parse_graph(std::string_view text, std::string name) {
  Lexer lx(text, true);
  skip_newlines(lx);
  const std::size_t n = index_value(lx.expect_kind(Tok::Number, "vertex count"));
  const Token m_tok = lx.expect_kind(Tok::Number, "edge count");
  const std::size_t m = index_value(m_tok);
  end_of_line(lx);
  if (n == 0) throw ParseError(m_tok.span, "graph needs at least one vertex");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < m; ++i) {
    skip_newlines(lx);
    if (lx.peek().kind == Tok::End) {
      throw ParseError(lx.peek().span, "expected " + std::to_string(m) + " edges, found " + std::to_string(i), {"edge"});
    }
    const Token ut = lx.expect_kind(Tok::Number, "vertex");
    const Token vt = lx.expect_kind(Tok::Number, "vertex");
    const std::size_t u = index_value(ut);
    const std::size_t v = index_value(vt);
    if (u >= n) throw ParseError(ut.span, "vertex " + ut.text + " out of range");
    if (v >= n) throw ParseError(vt.span, "vertex " + vt.text + " out of range");
    if (u == v) throw ParseError(ut.span, "self-loop on vertex " + ut.text);
    const Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) throw ParseError(ut.span, "duplicate edge " + ut.text + " " + vt.text);
    edges.push_back(e);
    end_of_line(lx);
  }
  skip_newlines(lx);
  if (lx.peek().kind != Tok::End) {
    throw ParseError(lx.peek().span, "unexpected " + describe(lx.peek()) + " after " + std::to_string(m) + " edges",
                     {"end of input"});
  }
  return CouplingGraph(n, edges, std::move(name));
}

std::string emit_graph(const CouplingGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.edges().size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["g"] = r.g;
  j["graph"] = r.graph;
  j["strategy"] = r.strategy;
  j["cnots"] = r.cnots;
  j["depth"] = r.depth;
  j["alpha"] = r.alpha ? nlohmann::ordered_json(*r.alpha) : nlohmann::ordered_json(nullptr);
  j["violations"] = r.violations;
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

std::string emit_record(const Record& r) { return to_json(r).dump(); }

std::string format_table(const std::vector<Record>& records) {
  const std::vector<std::string> head = {"instance", "seed",  "n",     "g",          "graph",
                                         "strategy", "cnots", "depth", "alpha",      "violations"};
  std::vector<std::vector<std::string>> rows = {head};
  for (const auto& r : records) {
    char alpha[32] = "-";
    if (r.alpha) std::snprintf(alpha, sizeof alpha, "%.3f", *r.alpha);
    rows.push_back({r.instance, std::to_string(r.seed), std::to_string(r.n), std::to_string(r.g), r.graph.empty() ? "-" : r.graph,
                    r.strategy, std::to_string(r.cnots), std::to_string(r.depth), alpha, std::to_string(r.violations)});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += "  ";
      out += row[i];
      if (i + 1 < row.size()) out.append(width[i] - row[i].size(), ' ');
    }
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace paritysynth
