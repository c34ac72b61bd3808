#pragma once

#include "diffalg/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diffalg {

/// One finding of an exhaustive scan: which property failed, where, and a
/// human-readable detail line. Reports keep findings sorted (enumeration
/// order is lexicographic) and deterministic.
struct ScanViolation {
  std::string kind;
  std::vector<std::uint64_t> where;
  std::string detail;

  friend bool operator==(const ScanViolation&, const ScanViolation&) = default;
};

/// Evidence record of an exhaustive scan over an explicit range. An empty
/// violation list certifies exactly the scanned range, nothing beyond it.
struct ScanReport {
  std::string scan;
  std::vector<std::pair<std::string, std::uint64_t>> params;
  std::vector<ScanViolation> violations;
  /// Total number of findings; the stored list is capped (see kViolationCap)
  /// so diagnostic runs stay bounded.
  std::uint64_t violation_count = 0;
  double elapsed_ms = 0.0;

  bool ok() const { return violation_count == 0; }

  static constexpr std::uint64_t kViolationCap = 1000;
};

/// The witness term u_n = y_{n+2^n-1} * y_{n+2^{n+1}-1} as a one-term
/// polynomial with coefficient 1. Its effective order is exactly 2^n
/// (checked at construction). Throws std::overflow_error when the indices
/// do not fit the native unsigned range (n > 62).
DiffPoly make_u(std::uint64_t n);

/// The bare term of u_{family} shifted by `shift`.
Term witness_term(std::uint64_t family, std::uint64_t shift);

/// The witness polynomial A_n = u_{2n-2} + u_{2n-1}, n >= 1. Built from
/// make_u and cross-checked against the equivalent closed-form index
/// expressions; the two constructions must agree exactly.
DiffPoly make_A(std::uint64_t n);

/// Exact inverse of (family, shift) -> shifted witness term. Returns the
/// unique coordinates when t is some y_a*y_b with b-a a power of two and
/// a large enough, nothing otherwise. Uniqueness holds because the
/// effective order pins the family and the smaller index pins the shift.
struct WitnessCoords {
  std::uint64_t family;
  std::uint64_t shift;

  friend bool operator==(const WitnessCoords&, const WitnessCoords&) = default;
};
std::optional<WitnessCoords> witness_term_coords(const Term& t);

enum class TupleMode {
  distinct,  ///< scan only tuples of pairwise distinct integers
  all        ///< diagnostic: include degenerate tuples, which must violate
};

/// Exhaustively scans all 4-tuples (a,b,c,d) in [0,max_exp]^4 (distinct
/// entries unless mode==all) for coincidences among sums and differences of
/// powers of two:
///   2^b - 2^a == 2^d - 2^c   ("diff-diff")
///   2^b - 2^a == 2^d + 2^c   ("diff-sum")
///   2^a + 2^b == 2^d + 2^c   ("sum-sum")
/// An empty report certifies the absence of coincidences over the range.
/// Requires 3 <= max_exp <= 62 in distinct mode (max_exp <= 62 always).
ScanReport two_power_coincidence_scan(std::uint64_t max_exp,
                                      TupleMode mode = TupleMode::distinct);

/// Measures the effective order of u_0..u_{n_max} through make_u (not the
/// closed formula), then verifies: each measured value equals 2^n, all are
/// pairwise distinct, and no sum/difference coincidence exists among any
/// four distinct measured values. Requires 1 <= n_max <= 62.
ScanReport eord_distinctness_scan(std::uint64_t n_max);

/// Enumerates the terms of u_k shifted by j for all k <= k_max, j <= j_max
/// and reports any collision between distinct (k, j) pairs. `extra` entries
/// (term, family, shift) are injected into the table before detection so
/// diagnostics can prove the detector fires on fabricated duplicates.
ScanReport monomial_injectivity_scan(
    std::uint64_t k_max, std::uint64_t j_max,
    const std::vector<std::pair<Term, WitnessCoords>>& extra = {});

}  // namespace diffalg
