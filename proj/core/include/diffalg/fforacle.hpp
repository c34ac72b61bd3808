#pragma once

#include "diffalg/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace diffalg {

/// A linear form over F_p on an explicit variable support; coefficients are
/// residues in [0, p).
struct FFLinearForm {
  std::vector<std::pair<VarIndex, std::uint32_t>> coeffs;

  /// Lift to a polynomial with integer coefficients in [0, p).
  DiffPoly lift() const;
};

struct FFFactorization {
  std::uint32_t prime = 0;
  FFLinearForm left;
  FFLinearForm right;
};

/// Reduces q mod `prime` and exhaustively searches every pair of linear
/// forms on q's support (the left factor normalized to leading coefficient
/// 1, which loses no factorization: scaling moves units between the
/// factors) for a pair whose product equals q mod p. First match in the
/// fixed enumeration order is returned, so the result is deterministic.
///
/// Independent of the Gram-rank route: this is plain coefficient
/// enumeration and comparison in F_p. In characteristic 2 the Gram
/// correspondence fails (sums of squares factor via Frobenius), so mod-2
/// answers are ground truth for F_2 only.
///
/// Contract errors: q not nonzero homogeneous of degree 2; support larger
/// than 6 variables (cost grows like p^(2*support)); prime not a prime or
/// too large; a coefficient denominator divisible by p; q vanishing mod p.
std::optional<FFFactorization> finite_field_factor_oracle(const DiffPoly& q,
                                                          std::uint32_t prime);

/// Residue of a rational mod p; the denominator must be invertible.
std::uint32_t reduce_mod(const Rational& r, std::uint32_t prime);

}  // namespace diffalg
