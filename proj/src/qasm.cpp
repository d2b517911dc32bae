// Copyright 2026 The zxroute authors
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

#include "zxroute/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <optional>

namespace zxroute {

namespace {

constexpr std::int64_t kMaxSnapDenominator = 1 << 20;

enum class TokenKind { Identifier, Number, Punct, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw QasmError(message, current_.line, current_.column);
  }

 private:
  void advance() {
    skip_space_and_comments();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_ = {TokenKind::End, "", line_, column_};
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        consume();
      }
      current_ = {TokenKind::Identifier,
                  std::string(text_.substr(start, pos_ - start)),
                  current_.line, current_.column};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
               (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
        consume();
      }
      current_ = {TokenKind::Number,
                  std::string(text_.substr(start, pos_ - start)),
                  current_.line, current_.column};
      return;
    }
    if (c == '"') {
      std::size_t start = pos_;
      consume();
      while (pos_ < text_.size() && text_[pos_] != '"') {
        consume();
      }
      if (pos_ < text_.size()) {
        consume();
      }
      current_ = {TokenKind::Identifier,
                  std::string(text_.substr(start, pos_ - start)),
                  current_.line, current_.column};
      return;
    }
    consume();
    current_ = {TokenKind::Punct, std::string(1, c), current_.line,
                current_.column};
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          consume();
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        consume();
      } else {
        break;
      }
    }
  }

  void consume() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_{TokenKind::End, "", 1, 1};
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Exact rational from an integer or plain decimal literal; nullopt when the
// literal does not fit (scientific notation, too many digits).
std::optional<Rational> exact_rational(const std::string& literal) {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool fractional = false;
  for (char c : literal) {
    if (c == '.') {
      if (fractional) {
        return std::nullopt;
      }
      fractional = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return std::nullopt;
    }
    if (num > (INT64_MAX - 9) / 10 || den > INT64_MAX / 10) {
      return std::nullopt;
    }
    num = num * 10 + (c - '0');
    if (fractional) {
      den *= 10;
    }
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

class Parser {
 public:
  Parser(std::string_view text, ParseDiagnostics* diagnostics)
      : lexer_(text), diagnostics_(diagnostics) {}

  Circuit parse() {
    while (lexer_.peek().kind != TokenKind::End) {
      statement();
    }
    if (!saw_qreg_) {
      throw QasmError("missing qreg declaration", 1, 1);
    }
    return std::move(circuit_);
  }

 private:
  void statement() {
    Token t = lexer_.next();
    if (t.kind != TokenKind::Identifier) {
      throw QasmError("expected statement", t.line, t.column);
    }
    if (t.text == "OPENQASM") {
      expect_kind(TokenKind::Number, "version number");
      expect_punct(";");
      return;
    }
    if (t.text == "include") {
      lexer_.next();  // filename string
      expect_punct(";");
      return;
    }
    if (t.text == "qreg") {
      if (saw_qreg_) {
        throw QasmError("multiple qreg declarations", t.line, t.column);
      }
      Token name = expect_kind(TokenKind::Identifier, "register name");
      reg_name_ = name.text;
      expect_punct("[");
      Token size = expect_kind(TokenKind::Number, "register size");
      expect_punct("]");
      expect_punct(";");
      std::size_t n = 0;
      auto [p, ec] = std::from_chars(size.text.data(),
                                     size.text.data() + size.text.size(), n);
      if (ec != std::errc() || n == 0) {
        throw QasmError("invalid register size", size.line, size.column);
      }
      circuit_.num_qubits = n;
      saw_qreg_ = true;
      return;
    }
    if (t.text == "creg" || t.text == "measure" || t.text == "reset" ||
        t.text == "gate" || t.text == "if" || t.text == "opaque") {
      throw QasmError("unsupported statement '" + t.text + "'", t.line,
                      t.column);
    }
    if (t.text == "barrier") {
      while (lexer_.peek().kind != TokenKind::End &&
             !(lexer_.peek().kind == TokenKind::Punct &&
               lexer_.peek().text == ";")) {
        lexer_.next();
      }
      expect_punct(";");
      return;
    }
    gate_statement(t);
  }

  void gate_statement(const Token& name) {
    if (!saw_qreg_) {
      throw QasmError("gate before qreg declaration", name.line, name.column);
    }
    Phase phase;
    if (name.text == "rz") {
      expect_punct("(");
      phase = parse_angle(name.line);
      expect_punct(")");
    }
    std::vector<std::size_t> qubits;
    qubits.push_back(parse_qubit());
    while (lexer_.peek().kind == TokenKind::Punct &&
           lexer_.peek().text == ",") {
      lexer_.next();
      qubits.push_back(parse_qubit());
    }
    expect_punct(";");

    Gate gate;
    if (name.text == "rz") {
      gate = Gate{GateKind::RZ, qubits, phase};
    } else if (name.text == "h") {
      gate = Gate{GateKind::H, qubits, Phase()};
    } else if (name.text == "x") {
      gate = Gate{GateKind::X, qubits, Phase()};
    } else if (name.text == "z") {
      gate = Gate{GateKind::Z, qubits, Phase()};
    } else if (name.text == "s") {
      gate = Gate{GateKind::S, qubits, Phase()};
    } else if (name.text == "sdg") {
      gate = Gate{GateKind::Sdg, qubits, Phase()};
    } else if (name.text == "t") {
      gate = Gate{GateKind::T, qubits, Phase()};
    } else if (name.text == "tdg") {
      gate = Gate{GateKind::Tdg, qubits, Phase()};
    } else if (name.text == "cx") {
      gate = Gate{GateKind::CX, qubits, Phase()};
    } else if (name.text == "cz") {
      gate = Gate{GateKind::CZ, qubits, Phase()};
    } else if (name.text == "swap") {
      gate = Gate{GateKind::SWAP, qubits, Phase()};
    } else {
      throw QasmError("unsupported gate '" + name.text + "'", name.line,
                      name.column);
    }
    try {
      circuit_.append(gate);
    } catch (const std::invalid_argument& e) {
      throw QasmError(e.what(), name.line, name.column);
    }
  }

  std::size_t parse_qubit() {
    Token reg = expect_kind(TokenKind::Identifier, "qubit reference");
    if (reg.text != reg_name_) {
      throw QasmError("unknown register '" + reg.text + "'", reg.line,
                      reg.column);
    }
    expect_punct("[");
    Token idx = expect_kind(TokenKind::Number, "qubit index");
    expect_punct("]");
    std::size_t q = 0;
    auto [p, ec] =
        std::from_chars(idx.text.data(), idx.text.data() + idx.text.size(), q);
    if (ec != std::errc()) {
      throw QasmError("invalid qubit index", idx.line, idx.column);
    }
    if (q >= circuit_.num_qubits) {
      throw QasmError("qubit index out of range", idx.line, idx.column);
    }
    return q;
  }

  // angle := ['-'] factor {('*'|'/') factor} with factors 'pi' or numeric.
  // Exact rational arithmetic while the literals allow it; otherwise the
  // value is snapped to a rational multiple of pi with denominator <= 2^20
  // and the snap error is recorded in the diagnostics.
  Phase parse_angle(std::size_t stmt_line) {
    bool negative = false;
    if (lexer_.peek().kind == TokenKind::Punct && lexer_.peek().text == "-") {
      lexer_.next();
      negative = true;
    }
    Rational coefficient{1, 1};
    bool has_pi = false;
    bool exact = true;
    double value = 1.0;
    bool dividing = false;
    while (true) {
      Token t = lexer_.next();
      if (t.kind == TokenKind::Identifier && t.text == "pi") {
        if (has_pi || dividing) {
          throw QasmError("unsupported angle expression", t.line, t.column);
        }
        has_pi = true;
      } else if (t.kind == TokenKind::Number) {
        double v = 0.0;
        try {
          v = std::stod(t.text);
        } catch (const std::exception&) {
          throw QasmError("invalid number", t.line, t.column);
        }
        value = dividing ? value / v : value * v;
        if (auto r = exact_rational(t.text)) {
          if (dividing) {
            if (r->num == 0) {
              throw QasmError("division by zero in angle", t.line, t.column);
            }
            coefficient = Rational{coefficient.num * r->den,
                                   coefficient.den * r->num};
          } else {
            coefficient =
                Rational{coefficient.num * r->num, coefficient.den * r->den};
          }
        } else {
          exact = false;
        }
      } else {
        throw QasmError("expected angle term", t.line, t.column);
      }
      if (lexer_.peek().kind == TokenKind::Punct &&
          (lexer_.peek().text == "*" || lexer_.peek().text == "/")) {
        dividing = lexer_.next().text == "/";
        continue;
      }
      break;
    }
    if (negative) {
      coefficient.num = -coefficient.num;
      value = -value;
    }
    if (has_pi && exact) {
      if (coefficient.den < 0) {
        coefficient.num = -coefficient.num;
        coefficient.den = -coefficient.den;
      }
      return Phase(coefficient.num, coefficient.den);
    }
    const double radians =
        has_pi ? value * 3.14159265358979323846 : value;
    double snap_error = 0.0;
    Phase snapped =
        Phase::from_radians(radians, kMaxSnapDenominator, &snap_error);
    if (diagnostics_ != nullptr && snap_error > 0.0) {
      diagnostics_->angle_snaps.push_back({stmt_line, snap_error});
    }
    return snapped;
  }

  Token expect_kind(TokenKind kind, const std::string& what) {
    Token t = lexer_.next();
    if (t.kind != kind) {
      throw QasmError("expected " + what, t.line, t.column);
    }
    return t;
  }

  void expect_punct(const std::string& text) {
    Token t = lexer_.next();
    if (t.kind != TokenKind::Punct || t.text != text) {
      throw QasmError("expected '" + text + "'", t.line, t.column);
    }
  }

  Lexer lexer_;
  ParseDiagnostics* diagnostics_;
  Circuit circuit_;
  std::string reg_name_;
  bool saw_qreg_ = false;
};

}  // namespace

QasmError::QasmError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error(message + " (line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

Circuit parse_qasm(std::string_view text, ParseDiagnostics* diagnostics) {
  return Parser(text, diagnostics).parse();
}

std::string write_qasm(const Circuit& circuit) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[";
  out += std::to_string(circuit.num_qubits);
  out += "];\n";
  for (const Gate& gate : circuit.gates) {
    const Gate g = gate.canonicalized();
    out += gate_name(g.kind);
    if (g.kind == GateKind::RZ) {
      out += "(" + g.phase.to_qasm() + ")";
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      out += i == 0 ? " q[" : ",q[";
      out += std::to_string(g.qubits[i]);
      out += "]";
    }
    out += ";\n";
  }
  return out;
}

}  // namespace zxroute
