#include "diffalg/parse.hpp"

#include <cctype>
#include <limits>

namespace diffalg {

ParseError::ParseError(std::size_t offset, std::string expected)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) +
                         ": expected " + expected),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  DiffPoly run() {
    std::vector<DiffPoly::Entry> entries;
    skip_ws();
    bool negative = accept_sign();
    parse_term(negative, entries);
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') throw err("'+' or '-'");
      ++pos_;
      skip_ws();
      parse_term(c == '-', entries);
      skip_ws();
    }
    return DiffPoly::from_entries(std::move(entries));
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  ParseError err(std::string expected) const { return {pos_, std::move(expected)}; }

  bool accept_sign() {
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  // Nonnegative decimal integer of arbitrary length.
  Integer parse_int(const char* what) {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw err(what);
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint64_t parse_bounded_int(const char* what) {
    std::size_t at = pos_;
    Integer v = parse_int(what);
    if (v > std::numeric_limits<std::uint64_t>::max())
      throw ParseError(at, std::string(what) + " within the native unsigned range");
    return v.convert_to<std::uint64_t>();
  }

  // factor := 'y' INT ['^' INT]
  Term::Factor parse_factor() {
    skip_ws();
    if (at_end() || peek() != 'y') throw err("'y'");
    ++pos_;
    VarIndex idx = parse_bounded_int("variable index (nonnegative integer)");
    Exponent exp = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      exp = parse_bounded_int("exponent (nonnegative integer)");
    }
    return {idx, exp};
  }

  // factors := factor ('*' factor)*
  Term parse_factors() {
    std::vector<Term::Factor> fs;
    fs.push_back(parse_factor());
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      fs.push_back(parse_factor());
      skip_ws();
    }
    return Term::from_factors(std::move(fs));
  }

  // term := (coef ['*' factors]) | factors
  void parse_term(bool negative, std::vector<DiffPoly::Entry>& out) {
    skip_ws();
    if (at_end()) throw err("a term");
    Rational coef(1);
    Term term;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_int("integer");
      Integer den(1);
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        den = parse_int("denominator (nonnegative integer)");
        if (den == 0) throw ParseError(at, "nonzero denominator");
      }
      coef = Rational(num, den);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        term = parse_factors();
      }
    } else if (peek() == 'y') {
      term = parse_factors();
    } else {
      throw err("a coefficient or 'y'");
    }
    if (negative) coef = -coef;
    out.emplace_back(std::move(term), std::move(coef));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace diffalg
