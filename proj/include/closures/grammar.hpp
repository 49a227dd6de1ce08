// Text grammar shared by the CLI and the JSON reports.
//
//   ideal       := monomial (',' monomial)*
//   monomial    := '1' | factor ('*'? factor)*
//   factor      := variable ('^' integer)?
//   polynomial  := ('-'? term) (('+'|'-') term)*
//   term        := integer ('*'? factor...)? | factor ('*'? factor)*
//   ring        := 'F' prime '[' variable (',' variable)* ']' ('/' '(' polynomial (',' polynomial)* ')')?
//
// Variables are declared up front (longest-match tokenization), whitespace
// is free, and parse errors carry a character position.
#ifndef CLOSURES_GRAMMAR_HPP
#define CLOSURES_GRAMMAR_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "closures/groebner.hpp"
#include "closures/monomial_ideal.hpp"
#include "closures/polyfp.hpp"

namespace closures {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t position() const { return pos_; }
  char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }
  [[noreturn]] void fail(const std::string& message) { throw parse_error(message, pos_); }

  unsigned long integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > (1ul << 40)) fail("integer too large");
      ++pos_;
    }
    return value;
  }

  /// Longest declared variable name starting here, if any.
  std::optional<std::size_t> variable(const std::vector<std::string>& names) {
    skip_space();
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& name = names[i];
      if (name.size() > best_len && text_.compare(pos_, name.size(), name) == 0) {
        best = i;
        best_len = name.size();
      }
    }
    if (best) pos_ += best_len;
    return best;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

// factor sequence "x^2*y" or "x^2 y"; returns accumulated exponents
inline bool parse_factors(Cursor& cur, const std::vector<std::string>& names,
                          std::vector<Integer>& exps) {
  bool any = false;
  for (;;) {
    if (any) {
      std::size_t mark = cur.position();
      bool star = cur.accept('*');
      auto var = cur.variable(names);
      if (!var) {
        if (star) cur.fail("expected variable after '*'");
        (void)mark;
        break;
      }
      unsigned long e = cur.accept('^') ? cur.integer() : 1;
      exps[*var] += static_cast<long>(e);
    } else {
      auto var = cur.variable(names);
      if (!var) break;
      any = true;
      unsigned long e = cur.accept('^') ? cur.integer() : 1;
      exps[*var] += static_cast<long>(e);
    }
  }
  return any;
}

}  // namespace detail

inline ExponentVector parse_monomial(const std::string& text, const std::vector<std::string>& names) {
  detail::Cursor cur(text);
  std::vector<Integer> exps(names.size(), Integer(0));
  if (cur.peek() == '1') {
    cur.accept('1');
    if (!cur.done()) cur.fail("unexpected input after '1'");
    return ExponentVector(std::move(exps));
  }
  if (!detail::parse_factors(cur, names, exps)) cur.fail("expected monomial");
  if (!cur.done()) cur.fail("unexpected input after monomial");
  return ExponentVector(std::move(exps));
}

inline MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& names) {
  std::vector<ExponentVector> gens;
  std::size_t start = 0;
  bool saw_any = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string piece = text.substr(start, i - start);
      bool blank = piece.find_first_not_of(" \t") == std::string::npos;
      if (!blank) {
        try {
          gens.push_back(parse_monomial(piece, names));
        } catch (const parse_error& e) {
          throw parse_error(e.what(), start + e.position());
        }
        saw_any = true;
      } else if (i != text.size() || saw_any) {
        throw parse_error("empty monomial", start);
      }
      start = i + 1;
    }
  }
  return MonomialIdeal(names.size(), std::move(gens));
}

inline std::string format_monomial(const ExponentVector& alpha,
                                   const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (is_zero(alpha[j])) continue;
    if (!out.empty()) out += "*";
    out += names.at(j);
    if (alpha[j] != 1) out += "^" + alpha[j].get_str();
  }
  return out.empty() ? "1" : out;
}

/// Generators print x-first (descending lex), the usual way staircases are
/// written; storage order stays ascending.
inline std::string format_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (std::size_t i = ideal.generator_count(); i-- > 0;) {
    out += format_monomial(ideal.generators()[i], names);
    if (i) out += ", ";
  }
  return out;
}

/// Default names: x, y, z for up to three variables, x1..xn beyond.
inline std::vector<std::string> default_variable_names(std::size_t n) {
  if (n <= 3) {
    std::vector<std::string> xyz = {"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + static_cast<long>(n)};
  }
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

inline PolyFp parse_polynomial(const std::string& text, unsigned long p,
                               const std::vector<std::string>& names) {
  detail::Cursor cur(text);
  PolyFp poly(p, names.size());
  bool first = true;
  for (;;) {
    bool negative = false;
    if (cur.accept('-'))
      negative = true;
    else if (!first)
      cur.expect('+');
    else
      cur.accept('+');
    first = false;

    unsigned long coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.integer() % p;
      saw_coeff = true;
      cur.accept('*');
    }
    std::vector<Integer> exps(names.size(), Integer(0));
    bool saw_vars = detail::parse_factors(cur, names, exps);
    if (!saw_coeff && !saw_vars) cur.fail("expected term");
    if (negative) coeff = (p - coeff % p) % p;
    poly.add_term(ExponentVector(std::move(exps)), coeff);

    if (cur.done()) break;
    char next = cur.peek();
    if (next != '+' && next != '-') cur.fail("expected '+' or '-'");
  }
  return poly;
}

inline std::string format_polynomial(const PolyFp& poly, const std::vector<std::string>& names) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : poly.terms()) {
    if (!out.empty()) out += " + ";
    if (e.is_origin()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += format_monomial(e, names);
    }
  }
  return out;
}

struct RingSpec {
  unsigned long p = 0;
  std::vector<std::string> variables;
  std::vector<std::string> relation_texts;  // canonical printed forms

  QuotientRing ring() const {
    std::vector<PolyFp> rels;
    for (const auto& t : relation_texts) rels.push_back(parse_polynomial(t, p, variables));
    return QuotientRing(p, variables, rels);
  }

  std::string text() const {
    std::string out = "F" + std::to_string(p) + "[";
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (i) out += ",";
      out += variables[i];
    }
    out += "]";
    if (!relation_texts.empty()) {
      out += "/(";
      for (std::size_t i = 0; i < relation_texts.size(); ++i) {
        if (i) out += ", ";
        out += relation_texts[i];
      }
      out += ")";
    }
    return out;
  }

  bool operator==(const RingSpec& other) const = default;
};

inline RingSpec parse_ring(const std::string& text) {
  detail::Cursor cur(text);
  if (!cur.accept('F')) cur.fail("ring must start with 'F'");
  RingSpec spec;
  spec.p = cur.integer();
  if (!is_prime(spec.p)) cur.fail("characteristic must be prime");
  cur.expect('[');
  for (;;) {
    cur.skip_space();
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(cur.raw_peek())) || cur.raw_peek() == '_') {
      name += cur.raw_peek();
      cur.advance();
    }
    if (name.empty()) cur.fail("expected variable name");
    for (const auto& existing : spec.variables)
      if (existing == name) cur.fail("duplicate variable name");
    spec.variables.push_back(name);
    if (cur.accept(']')) break;
    cur.expect(',');
  }
  if (cur.accept('/')) {
    cur.expect('(');
    std::string body;
    int depth = 1;
    for (;;) {
      char c = cur.raw_peek();
      if (c == '\0') cur.fail("unterminated relation list");
      if (c == '(') ++depth;
      if (c == ')') {
        --depth;
        if (depth == 0) {
          cur.advance();
          break;
        }
      }
      body += c;
      cur.advance();
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || body[i] == ',') {
        std::string piece = body.substr(start, i - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) {
          PolyFp rel = parse_polynomial(piece, spec.p, spec.variables);
          spec.relation_texts.push_back(format_polynomial(rel, spec.variables));
        }
        start = i + 1;
      }
    }
  }
  if (!cur.done()) cur.fail("unexpected input after ring");
  return spec;
}

}  // namespace closures

#endif
