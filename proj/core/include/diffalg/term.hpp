#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace diffalg {

/// Subscript k of the variable y_k (the k-th transform of the indeterminate).
using VarIndex = std::uint64_t;
using Exponent = std::uint64_t;

/// A power product y_{i1}^{k1} * ... * y_{im}^{km} of the variables
/// y_0, y_1, y_2, ...
///
/// Canonical form: factors are sorted by strictly increasing variable index
/// and every stored exponent is >= 1. The empty product is the constant
/// term 1. Terms are immutable values.
class Term {
public:
  using Factor = std::pair<VarIndex, Exponent>;

  /// The constant term 1.
  Term() = default;

  static Term variable(VarIndex k, Exponent e = 1);

  /// Builds a term from arbitrary (index, exponent) pairs: sorts, merges
  /// repeated indices and drops zero exponents.
  static Term from_factors(std::vector<Factor> factors);
  static Term of(std::initializer_list<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  Exponent exponent_of(VarIndex k) const;

  /// Sum of all exponents; 0 for the constant term.
  Exponent degree() const;

  /// Effective order: (largest variable index) - (smallest variable index).
  /// 0 for the constant term and for powers of a single variable.
  std::uint64_t eord() const;

  /// Smallest / largest variable index; 0 for the constant term.
  VarIndex min_index() const;
  VarIndex max_index() const;

  /// Every variable index increased by k. Throws std::overflow_error when
  /// an index would wrap around the native unsigned range.
  Term shifted(std::uint64_t k) const;

  friend Term operator*(const Term& a, const Term& b);

  /// Canonical order: graded, ties broken lexicographically on the expanded
  /// index-with-multiplicity sequence (y0^2 < y0*y1 < y1^2 < ...).
  static std::strong_ordering compare(const Term& a, const Term& b);

  friend bool operator==(const Term& a, const Term& b) = default;
  friend bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Term& a, const Term& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Term& a, const Term& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Term& a, const Term& b) { return compare(a, b) >= 0; }

  /// Grammar rendering: "y0*y1^2"; the constant term renders as "1".
  std::string str() const;

private:
  std::vector<Factor> factors_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace diffalg
