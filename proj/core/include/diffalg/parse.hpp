#pragma once

#include "diffalg/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diffalg {

/// Syntax error: byte offset into the input plus a description of what was
/// expected at that position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, std::string expected);

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

/// Parses the canonical polynomial grammar (ASCII, whitespace insignificant
/// between tokens):
///
///   poly    := [sign] term (('+'|'-') term)*
///   term    := (coef ['*' factors]) | factors
///   factors := factor ('*' factor)*
///   factor  := 'y' INT ['^' INT]
///   coef    := INT ['/' INT]
///
/// INT is a nonnegative decimal integer; a zero denominator is rejected.
/// parse_poly(format_poly(p)) == p for every canonical p.
DiffPoly parse_poly(std::string_view text);

}  // namespace diffalg
