#pragma once

#include "diffalg/rational.hpp"
#include "diffalg/term.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace diffalg {

/// A difference polynomial: finite sum of Terms with nonzero rational
/// coefficients, stored sparsely in increasing canonical term order.
///
/// Canonical sparse form is an invariant: no zero coefficients, no repeated
/// terms. Two polynomials are equal iff their term lists are equal.
/// Immutable value type; all operations return fresh values.
class DiffPoly {
public:
  using Entry = std::pair<Term, Rational>;

  /// The zero polynomial (empty term list).
  DiffPoly() = default;

  static DiffPoly constant(Rational c);
  static DiffPoly monomial(Term t, Rational c = Rational(1));

  /// Normalizing constructor: sorts, merges duplicate terms, drops zeros.
  static DiffPoly from_entries(std::vector<Entry> entries);

  bool is_zero() const { return entries_.empty(); }
  std::size_t term_count() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Coefficient of t, 0 when t does not occur.
  Rational coefficient(const Term& t) const;

  /// Largest term degree; 0 for the zero polynomial.
  Exponent degree() const;
  /// Smallest term degree; 0 for the zero polynomial.
  Exponent min_term_degree() const;
  /// True iff all terms share one degree (vacuously true for zero).
  bool is_homogeneous() const;
  bool is_homogeneous_of_degree(Exponent d) const;
  /// Largest variable index over all terms; 0 for constants and zero.
  VarIndex max_index() const;

  /// Applies the translation k times: every y_i becomes y_{i+k}.
  /// Coefficients are unchanged. Throws std::overflow_error on index wrap.
  DiffPoly shifted(std::uint64_t k) const;

  DiffPoly operator-() const;
  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const Rational& c, const DiffPoly& p);
  friend DiffPoly operator*(const DiffPoly& p, const Rational& c);
  friend DiffPoly operator*(const Term& t, const DiffPoly& p);
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);

  friend bool operator==(const DiffPoly& a, const DiffPoly& b) = default;

  /// Deterministic presentation order (entry-wise term order, then
  /// coefficient). Used to sort and deduplicate generator lists.
  static std::strong_ordering compare(const DiffPoly& a, const DiffPoly& b);
  friend bool operator<(const DiffPoly& a, const DiffPoly& b) {
    return compare(a, b) < 0;
  }

  /// Canonical grammar text, e.g. "y0*y1 + y2*y4", "-y0 + 3/2*y1^2", "0".
  std::string str() const;

private:
  std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, const DiffPoly& p);

/// Canonical text form (same as p.str()).
std::string format_poly(const DiffPoly& p);

}  // namespace diffalg
