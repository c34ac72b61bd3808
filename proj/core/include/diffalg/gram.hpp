#pragma once

#include "diffalg/linalg.hpp"
#include "diffalg/poly.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace diffalg {

/// Symmetric Gram matrix of a homogeneous degree-2 polynomial over its
/// variable support: the (a,a) entry is the coefficient of y_a^2, the (a,b)
/// entry for a != b is half the coefficient of y_a*y_b. In characteristic 0
/// the polynomial is a product of two linear forms over some field extension
/// iff this matrix has rank <= 2.
struct GramMatrix {
  std::vector<VarIndex> support;  // sorted
  RationalMatrix entries;

  std::size_t dimension() const { return support.size(); }
  std::size_t rank() const;
};

/// Requires q nonzero and homogeneous of degree 2 (contract error otherwise).
GramMatrix gram_matrix(const DiffPoly& q);

/// q == left * right with both factors linear homogeneous over Q.
struct QuadraticFactorization {
  DiffPoly left;
  DiffPoly right;
};

/// Gram rank <= 2 but the split needs a square root of `discriminant`,
/// which is not a rational square: q factors over the quadratic extension
/// adjoining sqrt(discriminant) and over no smaller extension of Q.
struct ExtensionSplit {
  std::size_t rank = 0;
  Rational discriminant;
};

/// Gram rank >= 3: q is not a product of two linear forms over ANY field
/// extension in characteristic 0.
struct IrreducibilityCertificate {
  std::size_t rank = 0;
};

using FactorResult =
    std::variant<QuadraticFactorization, ExtensionSplit, IrreducibilityCertificate>;

/// Exact trichotomy for a nonzero homogeneous degree-2 polynomial, decided
/// by the fraction-free rank of its Gram matrix:
///   rank >= 3            -> IrreducibilityCertificate
///   rank <= 2, rational  -> QuadraticFactorization (verified by expansion)
///   rank == 2, irrational-> ExtensionSplit with the needed discriminant
/// Factors are normalized so the right factor is monic in its smallest
/// variable; the left factor carries the scalar.
FactorResult factor_quadratic(const DiffPoly& q);

}  // namespace diffalg
