#pragma once

#include "diffalg/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace diffalg {

/// Finite generator list presenting the sigma-ideal [G]: as a plain ideal,
/// generated by all shifts of all generators. The list is nonzero-only,
/// deduplicated and sorted in presentation order, so equal presentations
/// compare equal.
class SigmaIdealPresentation {
public:
  SigmaIdealPresentation() = default;
  explicit SigmaIdealPresentation(std::vector<DiffPoly> generators);

  const std::vector<DiffPoly>& generators() const { return generators_; }
  bool contains_generator(const DiffPoly& g) const;

  friend bool operator==(const SigmaIdealPresentation&,
                         const SigmaIdealPresentation&) = default;

private:
  std::vector<DiffPoly> generators_;
};

/// Search window for bounded membership: shifts may not push any variable
/// index beyond max_index, and term multipliers are limited to degree
/// extra_degree with indices <= max_index.
struct MembershipBounds {
  VarIndex max_index = 0;
  std::uint64_t extra_degree = 0;
};

/// One summand of an explicit membership certificate:
/// coeff * multiplier * shift(generator, shift).
struct CombinationEntry {
  Rational coeff;
  Term multiplier;
  std::size_t generator;  // index into the presentation's generator list
  std::uint64_t shift;
};
using Combination = std::vector<CombinationEntry>;

/// Expands a combination back into a polynomial (certificate check).
DiffPoly expand_combination(const Combination& c,
                            const SigmaIdealPresentation& g);

/// Decides, within the given bounds, whether p lies in the plain ideal
/// generated by { t * shift(g, j) } with g a generator, j a shift keeping
/// indices <= bounds.max_index, and t a term of degree <= bounds.extra_degree
/// with indices <= bounds.max_index. Works degree by degree on the
/// homogeneous components of p and solves each exact linear system.
///
/// A returned combination certifies true membership in [G]. An empty result
/// means "not found within bounds" only -- it is NOT a refutation; exact
/// non-membership arguments live in the degree-2 slice and effective-order
/// bounds.
///
/// Requires p nonzero and every generator homogeneous (contract errors
/// otherwise).
std::optional<Combination> bounded_ideal_membership(
    const DiffPoly& p, const SigmaIdealPresentation& g, MembershipBounds b);

/// Bounded probe of the colon ideal [G] : {s}: certifies a*s in [G] within
/// bounds. a*s == 0 is trivially a member (empty combination).
std::optional<Combination> colon_membership(const DiffPoly& a,
                                            const DiffPoly& s,
                                            const SigmaIdealPresentation& g,
                                            MembershipBounds b);

}  // namespace diffalg
