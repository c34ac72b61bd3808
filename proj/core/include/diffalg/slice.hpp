#pragma once

#include "diffalg/poly.hpp"
#include "diffalg/witness.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace diffalg {

/// Index over the degree-2 homogeneous slice of [A_1,...,A_m]: that slice is
/// exactly the rational span of the shifted generators shift(A_i, j), whose
/// two-term supports are pairwise disjoint (a collision would force two
/// distinct (family, shift) pairs onto one monomial, which the witness
/// coordinate inverse rules out; construction re-checks it).
///
/// Maps each basis monomial to its generator index i (1-based), shift j, the
/// partner monomial it must pair with, and whether it is the low (even
/// family) member of the pair.
class Degree2Slice {
public:
  struct BasisEntry {
    std::uint64_t generator;  // i in A_i, 1-based
    std::uint64_t shift;      // j
    Term partner;
    bool low;

    friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
  };

  /// Index restricted to the shifts that can meet q's support. Only those
  /// shifts can contribute to a degree-2 representation of q, so the
  /// restriction loses nothing: the decision below is total, not truncated.
  static Degree2Slice for_query(std::uint64_t m, const DiffPoly& q);

  /// Full index over all shifts j <= max_shift (scale checks in tests).
  static Degree2Slice over_shifts(std::uint64_t m, std::uint64_t max_shift);

  std::uint64_t m() const { return m_; }
  const std::map<Term, BasisEntry>& basis_index() const { return index_; }

private:
  Degree2Slice(std::uint64_t m) : m_(m) {}
  void insert_pair(std::uint64_t family_low, std::uint64_t shift);

  std::uint64_t m_ = 0;
  std::map<Term, BasisEntry> index_;
};

/// One coefficient lambda_{i,j} of a membership certificate:
/// query = sum lambda_{i,j} * shift(A_i, j).
struct SliceCoefficient {
  std::uint64_t generator;
  std::uint64_t shift;
  Rational value;
};

/// Refutation: a monomial of the query that is not a shifted witness
/// monomial of any A_1..A_m, reported with its effective order and the
/// generator effective-order bound 2^{2m-1}.
struct AlienMonomial {
  Term monomial;
  std::uint64_t eord;
  std::uint64_t eord_bound;
  std::string reason;
};

/// Refutation: a shifted witness monomial whose partner monomial carries a
/// different coefficient, so no multiple of that shifted generator can
/// produce the pair.
struct PairingViolation {
  Term present;
  Term partner;
  Rational present_coeff;
  Rational partner_coeff;
};

/// Membership or refutation evidence for the degree-2 homogeneous slice.
/// Member certificates reconstruct the query exactly:
///   sum lambda_{i,j} * shift(A_i, j) == query.
struct SliceCertificate {
  enum class Verdict { member, non_member };

  Verdict verdict = Verdict::non_member;
  std::uint64_t m = 0;
  std::vector<SliceCoefficient> coefficients;  // member evidence
  std::optional<AlienMonomial> alien;          // non-member: exactly one of
  std::optional<PairingViolation> pairing;     // these two is set

  bool is_member() const { return verdict == Verdict::member; }
};

/// Decides membership of q in the degree-2 homogeneous slice of
/// [A_1,...,A_m], exactly and totally. Requires q nonzero and homogeneous of
/// degree 2 (contract errors otherwise; the zero polynomial is rejected to
/// keep certificates meaningful). Requires 1 <= m <= 31.
SliceCertificate degree2_slice_membership(const DiffPoly& q, std::uint64_t m);

/// Expands a member certificate back into the polynomial it represents.
DiffPoly reconstruct_slice_member(const SliceCertificate& cert);

/// Largest effective order of any term of A_1..A_m, i.e. 2^{2m-1} measured.
std::uint64_t generator_eord_bound(std::uint64_t m);

}  // namespace diffalg
