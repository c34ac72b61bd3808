#pragma once

#include "diffalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace diffalg {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Exact rank by fraction-free (Bareiss) elimination with full pivot search
/// over rows and column skipping for rank-deficient blocks. All divisions
/// are exact integer divisions; no floating point is involved anywhere.
std::size_t fraction_free_rank(IntegerMatrix m);

/// Rank of a rational matrix: rows are scaled by their denominator lcm
/// (rank-preserving) and handed to the fraction-free integer elimination.
std::size_t matrix_rank(const RationalMatrix& m);

/// Solves A x = b exactly over the rationals by Gauss-Jordan elimination.
/// Returns one particular solution with free variables set to 0, or nothing
/// when the system is inconsistent. A is rows x cols, b has `rows` entries.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a,
                                                  std::vector<Rational> b);

}  // namespace diffalg
