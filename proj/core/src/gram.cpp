#include "diffalg/gram.hpp"

#include <map>
#include <stdexcept>

namespace diffalg {

namespace {

void require_quadratic(const DiffPoly& q) {
  if (q.is_zero() || !q.is_homogeneous_of_degree(2))
    throw std::invalid_argument(
        "expected a nonzero homogeneous polynomial of degree 2");
}

// Exact division of p by the linear form l; empty when not divisible.
// Leads strictly decrease in the multiplicative term order, and all terms
// live on a fixed finite variable set, so the loop terminates.
std::optional<DiffPoly> divide_by_linear(const DiffPoly& p, const DiffPoly& l) {
  DiffPoly quotient;
  DiffPoly rem = p;
  const auto& lead_l = l.entries().back();
  while (!rem.is_zero()) {
    const auto& lead_r = rem.entries().back();
    // lead_l is a single variable y_w; divisibility means w occurs in lead_r.
    const VarIndex w = lead_l.first.max_index();
    if (lead_r.first.exponent_of(w) == 0) return std::nullopt;
    std::vector<Term::Factor> fs;
    bool dropped = false;
    for (auto [idx, exp] : lead_r.first.factors()) {
      if (idx == w && !dropped) {
        --exp;
        dropped = true;
      }
      if (exp > 0) fs.emplace_back(idx, exp);
    }
    DiffPoly step = DiffPoly::monomial(Term::from_factors(std::move(fs)),
                                       lead_r.second / lead_l.second);
    quotient += step;
    rem -= step * l;
  }
  return quotient;
}

// Splits q into alpha*y_a^2 + y_a*L + Q with a absent from L and Q.
struct PivotSplit {
  Rational alpha;
  DiffPoly linear;  // L
  DiffPoly rest;    // Q
};

PivotSplit split_at(const DiffPoly& q, VarIndex a) {
  PivotSplit s;
  for (const auto& [t, c] : q.entries()) {
    const Exponent e = t.exponent_of(a);
    if (e == 2) {
      s.alpha = c;
    } else if (e == 1) {
      // t == y_a * y_b for exactly one other variable b.
      for (const auto& [idx, exp] : t.factors())
        if (idx != a) s.linear += DiffPoly::monomial(Term::variable(idx), c);
    } else {
      s.rest += DiffPoly::monomial(t, c);
    }
  }
  return s;
}

// Writes a nonzero quadratic form of Gram rank 1 as delta * m0^2 with m0
// monic in its smallest squared variable. Empty when r is not of that shape.
struct SquareExtraction {
  Rational delta;
  DiffPoly root;  // m0
};

std::optional<SquareExtraction> extract_square(const DiffPoly& r) {
  for (const auto& [t, c] : r.entries()) {
    if (t.factors().size() != 1 || t.factors().front().second != 2) continue;
    const VarIndex v = t.factors().front().first;
    const Rational delta = c;
    DiffPoly m0 = DiffPoly::monomial(Term::variable(v));
    for (const auto& [s, d] : r.entries()) {
      if (s.exponent_of(v) != 1) continue;
      for (const auto& [idx, exp] : s.factors())
        if (idx != v)
          m0 += DiffPoly::monomial(Term::variable(idx), d / (2 * delta));
    }
    if (delta * m0 * m0 == r) return SquareExtraction{delta, m0};
    return std::nullopt;
  }
  return std::nullopt;  // no squared variable: symmetric rank 1 is impossible
}

// Scale so the right factor is monic in its smallest variable.
QuadraticFactorization normalize(DiffPoly left, DiffPoly right,
                                 const DiffPoly& q) {
  const Rational lead = right.entries().front().second;
  left = lead * left;
  right = (Rational(1) / lead) * right;
  if (left * right != q)
    throw std::logic_error("quadratic factorization failed re-expansion");
  return {std::move(left), std::move(right)};
}

}  // namespace

GramMatrix gram_matrix(const DiffPoly& q) {
  require_quadratic(q);
  std::map<VarIndex, std::size_t> position;
  for (const auto& [t, c] : q.entries())
    for (const auto& [idx, exp] : t.factors()) position.emplace(idx, 0);
  GramMatrix g;
  g.support.reserve(position.size());
  for (auto& [idx, pos] : position) {
    pos = g.support.size();
    g.support.push_back(idx);
  }
  g.entries.assign(position.size(),
                   std::vector<Rational>(position.size(), Rational(0)));
  for (const auto& [t, c] : q.entries()) {
    const auto& fs = t.factors();
    if (fs.size() == 1) {
      const std::size_t i = position[fs[0].first];
      g.entries[i][i] = c;
    } else {
      const std::size_t i = position[fs[0].first];
      const std::size_t j = position[fs[1].first];
      g.entries[i][j] = g.entries[j][i] = c / 2;
    }
  }
  return g;
}

std::size_t GramMatrix::rank() const { return matrix_rank(entries); }

FactorResult factor_quadratic(const DiffPoly& q) {
  const GramMatrix g = gram_matrix(q);  // also validates the contract
  const std::size_t rank = g.rank();
  if (rank >= 3) return IrreducibilityCertificate{rank};

  // Find the smallest variable carrying a square term.
  std::optional<VarIndex> pivot;
  for (const auto& [t, c] : q.entries()) {
    if (t.factors().size() == 1) {
      const VarIndex v = t.factors().front().first;
      if (!pivot || v < *pivot) pivot = v;
    }
  }

  if (!pivot) {
    // No squares: q = y_a * L + Q with Q divisible by L whenever the rank
    // is <= 2 (y_a is then an isotropic vector outside the radical, and the
    // form splits off a hyperbolic plane over the rationals).
    const VarIndex a = q.entries().front().first.min_index();
    const PivotSplit s = split_at(q, a);
    if (s.rest.is_zero())
      return normalize(DiffPoly::monomial(Term::variable(a)), s.linear, q);
    auto quot = divide_by_linear(s.rest, s.linear);
    if (!quot)
      throw std::logic_error("rank <= 2 quadratic with indivisible remainder");
    return normalize(DiffPoly::monomial(Term::variable(a)) + *quot, s.linear, q);
  }

  const PivotSplit s = split_at(q, *pivot);
  const Rational& alpha = s.alpha;
  const DiffPoly y_a = DiffPoly::monomial(Term::variable(*pivot));
  // Complete the square: discriminant form R = L^2 - 4*alpha*Q has Gram
  // rank <= 1 exactly when rank(q) <= 2.
  const DiffPoly r = s.linear * s.linear - Rational(4) * alpha * s.rest;
  if (r.is_zero()) {
    const DiffPoly root = y_a + (Rational(1) / (2 * alpha)) * s.linear;
    return normalize(alpha * root, root, q);
  }
  auto square = extract_square(r);
  if (!square)
    throw std::logic_error("rank <= 2 quadratic with non-square discriminant form");
  if (!is_rational_square(square->delta))
    return ExtensionSplit{rank, square->delta};

  const Rational sqrt_delta(
      boost::multiprecision::sqrt(numerator(square->delta)),
      boost::multiprecision::sqrt(denominator(square->delta)));
  const DiffPoly m = sqrt_delta * square->root;
  const Rational half_inv = Rational(1) / (2 * alpha);
  DiffPoly f1 = y_a + half_inv * (s.linear - m);
  DiffPoly f2 = y_a + half_inv * (s.linear + m);
  return normalize(alpha * f1, f2, q);
}

}  // namespace diffalg
