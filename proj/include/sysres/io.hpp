#pragma once

// Text formats.
//
// System file:
//   # comment
//   vars: 3
//   x0^2 - 2*x1^2 + 3/4*x0*x2
//   x0 - 3*x1
//
// One polynomial per line, grammar
//   polynomial := ['+'|'-'] term (('+'|'-') term)*
//   term       := [INT ['/' INT]] ('*'? var_power)*
//   var_power  := 'x' INDEX ['^' EXP]
//
// Plan file (custom multiplier spaces):
//   scheme: custom
//   vars: 2
//   slots: 3
//   block 0
//   x0 ; 0 ; 0        <- one basis tuple, slot entries separated by ';'
//   ...
//   block 1
//   ...

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sysres/error.hpp"
#include "sysres/field.hpp"
#include "sysres/multipliers.hpp"
#include "sysres/polynomial.hpp"

namespace sysres {

namespace detail {

inline std::string location(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t num_vars, std::size_t line, std::size_t column_offset)
      : text_(text), num_vars_(num_vars), line_(line), offset_(column_offset) {}

  Polynomial<RationalField> parse() {
    Polynomial<RationalField> out(RationalField{}, num_vars_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      parse_term(out, sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, location(line_, offset_ + pos_ + 1) + msg);
  }

  unsigned small_number() {
    const std::size_t start = pos_;
    const auto text = digits();
    if (text.size() > 6) {
      pos_ = start;
      fail("number too large");
    }
    return static_cast<unsigned>(std::stoul(text));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(Polynomial<RationalField>& out, int sign) {
    mpq_class coefficient = 1;
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      coefficient = mpq_class(num, den);
      coefficient.canonicalize();
      have_coefficient = true;
    }
    std::vector<unsigned> exps(num_vars_, 0);
    bool have_var = false;
    for (;;) {
      skip_space();
      if (at_end()) break;
      std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 'x') fail("expected a variable after '*'");
      }
      if (at_end() || peek() != 'x') {
        pos_ = save;
        break;
      }
      const std::size_t var_pos = pos_++;
      const unsigned index = small_number();
      if (index >= num_vars_) {
        pos_ = var_pos;
        fail("variable x" + std::to_string(index) + " out of range (vars: " + std::to_string(num_vars_) + ")");
      }
      unsigned exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        exponent = small_number();
      }
      exps[index] += exponent;
      have_var = true;
    }
    if (!have_coefficient && !have_var) fail("expected a term");
    if (sign < 0) coefficient = -coefficient;
    out.add_term(Monomial(std::move(exps)), coefficient);
  }

  std::string_view text_;
  std::size_t num_vars_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

inline std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  std::size_t column;  // 1-based column of the first non-space character
  std::string_view text;
};

inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const auto raw = strip_comment(text.substr(start, end - start));
    const auto body = trim(raw);
    if (!body.empty()) out.push_back({number, static_cast<std::size_t>(body.data() - raw.data()) + 1, body});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

/// Parses "key: value" and returns value; nullopt if the key does not match.
inline std::optional<std::string_view> header_value(const Line& line, std::string_view key) {
  if (line.text.substr(0, key.size()) != key) return std::nullopt;
  auto rest = trim(line.text.substr(key.size()));
  if (rest.empty() || rest.front() != ':') return std::nullopt;
  return trim(rest.substr(1));
}

inline std::size_t parse_count(const Line& line, std::string_view value, std::string_view what) {
  std::size_t idx = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(std::string(value), &idx);
  } catch (const std::exception&) {
    idx = 0;
  }
  if (idx == 0 || idx != value.size() || v == 0)
    throw Error(ErrorKind::parse, location(line.number, line.column) + "invalid " + std::string(what) + " '" +
                                      std::string(value) + "'");
  return v;
}

}  // namespace detail

inline Polynomial<RationalField> parse_polynomial(std::string_view text, std::size_t num_vars, std::size_t line = 1,
                                                  std::size_t column = 1) {
  return detail::PolynomialParser(text, num_vars, line, column - 1).parse();
}

/// Parses a system file; every nonzero line must be homogeneous of degree >= 1.
inline PolySystem<RationalField> parse_system(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::parse, "empty system file (expected 'vars: <k>')");
  auto vars = detail::header_value(lines.front(), "vars");
  if (!vars)
    throw Error(ErrorKind::parse, detail::location(lines.front().number, lines.front().column) +
                                      "expected header 'vars: <k>'");
  const std::size_t num_vars = detail::parse_count(lines.front(), *vars, "variable count");
  std::vector<Polynomial<RationalField>> polys;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto p = parse_polynomial(line.text, num_vars, line.number, line.column);
    const auto degree = is_homogeneous(p);
    if (!degree)
      throw Error(ErrorKind::parse, detail::location(line.number, line.column) + "polynomial is not homogeneous");
    if (!p.is_zero() && *degree == 0)
      throw Error(ErrorKind::parse, detail::location(line.number, line.column) + "polynomial has degree 0");
    polys.push_back(std::move(p));
  }
  if (polys.empty()) throw Error(ErrorKind::parse, "system file contains no polynomials");
  return PolySystem<RationalField>(num_vars, std::move(polys));
}

template <Field F>
std::string format_polynomial(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string coeff = p.field().to_string(c);
    const bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += vars;
    } else {
      out += coeff + "*" + vars;
    }
  }
  return out;
}

template <Field F>
std::string format_system(const PolySystem<F>& system) {
  std::string out = "vars: " + std::to_string(system.num_vars()) + "\n";
  for (const auto& p : system.polys()) out += format_polynomial(p) + "\n";
  return out;
}

/// Parses a custom plan file into an unbound plan (see bind_custom_plan).
inline MultiplierPlan parse_plan(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::size_t cursor = 0;
  auto expect_header = [&](std::string_view key) -> std::string_view {
    if (cursor >= lines.size()) throw Error(ErrorKind::parse, "plan file ends before '" + std::string(key) + ":'");
    auto v = detail::header_value(lines[cursor], key);
    if (!v)
      throw Error(ErrorKind::parse, detail::location(lines[cursor].number, lines[cursor].column) + "expected '" +
                                        std::string(key) + ": ...'");
    ++cursor;
    return *v;
  };
  const auto scheme = expect_header("scheme");
  if (scheme != "custom")
    throw Error(ErrorKind::parse, detail::location(lines[0].number, lines[0].column) + "plan files must declare 'scheme: custom'");
  const auto& vars_line = lines[std::min(cursor, lines.size() - 1)];
  const std::size_t num_vars = detail::parse_count(vars_line, expect_header("vars"), "variable count");
  const auto& slots_line = lines[std::min(cursor, lines.size() - 1)];
  const std::size_t num_slots = detail::parse_count(slots_line, expect_header("slots"), "slot count");

  std::vector<std::vector<BasisTuple>> blocks;
  while (cursor < lines.size()) {
    const auto& line = lines[cursor++];
    if (line.text.substr(0, 5) == "block") {
      const auto index_text = detail::trim(line.text.substr(5));
      if (index_text != std::to_string(blocks.size()))
        throw Error(ErrorKind::parse, detail::location(line.number, line.column) + "expected 'block " +
                                          std::to_string(blocks.size()) + "'");
      blocks.emplace_back();
      continue;
    }
    if (blocks.empty())
      throw Error(ErrorKind::parse, detail::location(line.number, line.column) + "basis tuple before any 'block' line");
    BasisTuple tuple;
    std::size_t start = 0;
    for (;;) {
      auto end = line.text.find(';', start);
      const auto piece = line.text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      const auto body = detail::trim(piece);
      const std::size_t column = line.column + start + static_cast<std::size_t>(body.data() - piece.data());
      if (body.empty()) throw Error(ErrorKind::parse, detail::location(line.number, column) + "empty slot entry");
      tuple.slots.push_back(parse_polynomial(body, num_vars, line.number, column));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    if (tuple.slots.size() != num_slots)
      throw Error(ErrorKind::parse, detail::location(line.number, line.column) + "tuple has " +
                                        std::to_string(tuple.slots.size()) + " entries, expected " +
                                        std::to_string(num_slots));
    blocks.back().push_back(std::move(tuple));
  }
  return plan_custom(num_vars, num_slots, std::move(blocks));
}

inline std::string format_plan(const MultiplierPlan& plan) {
  std::ostringstream out;
  out << "scheme: custom\nvars: " << plan.num_vars << "\nslots: " << plan.num_slots << "\n";
  for (std::size_t i = 0; i < plan.num_blocks(); ++i) {
    out << "block " << i << "\n";
    for (const auto& t : plan.basis[i]) {
      for (std::size_t j = 0; j < t.slots.size(); ++j) out << (j ? " ; " : "") << format_polynomial(t.slots[j]);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace sysres
