#include "diffalg/slice.hpp"

#include <sstream>
#include <stdexcept>

namespace diffalg {

std::uint64_t generator_eord_bound(std::uint64_t m) {
  if (m == 0 || m > 31)
    throw std::invalid_argument("generator count m must be in 1..31");
  std::uint64_t bound = 0;
  for (std::uint64_t i = 1; i <= m; ++i) {
    const DiffPoly a = make_A(i);
    for (const auto& [t, c] : a.entries()) bound = std::max(bound, t.eord());
  }
  return bound;
}

void Degree2Slice::insert_pair(std::uint64_t family_low, std::uint64_t shift) {
  const std::uint64_t i = family_low / 2 + 1;
  Term low = witness_term(family_low, shift);
  Term high = witness_term(family_low + 1, shift);
  BasisEntry low_entry{i, shift, high, true};
  BasisEntry high_entry{i, shift, low, false};
  auto [lit, lin] = index_.emplace(std::move(low), std::move(low_entry));
  auto [hit, hin] = index_.emplace(std::move(high), std::move(high_entry));
  // Disjoint supports: a monomial may only recur with the same coordinates.
  if ((!lin && lit->second != BasisEntry{i, shift, hit->first, true}) ||
      (!hin && hit->second != BasisEntry{i, shift, lit->first, false}))
    throw std::logic_error("shifted witness monomial supports collide");
}

Degree2Slice Degree2Slice::for_query(std::uint64_t m, const DiffPoly& q) {
  if (m == 0 || m > 31)
    throw std::invalid_argument("generator count m must be in 1..31");
  Degree2Slice slice(m);
  for (const auto& [t, c] : q.entries()) {
    auto coords = witness_term_coords(t);
    if (!coords || coords->family >= 2 * m) continue;  // alien to the basis
    slice.insert_pair(coords->family & ~std::uint64_t{1}, coords->shift);
  }
  return slice;
}

Degree2Slice Degree2Slice::over_shifts(std::uint64_t m, std::uint64_t max_shift) {
  if (m == 0 || m > 31)
    throw std::invalid_argument("generator count m must be in 1..31");
  Degree2Slice slice(m);
  for (std::uint64_t i = 1; i <= m; ++i)
    for (std::uint64_t j = 0; j <= max_shift; ++j)
      slice.insert_pair(2 * i - 2, j);
  return slice;
}

SliceCertificate degree2_slice_membership(const DiffPoly& q, std::uint64_t m) {
  if (q.is_zero())
    throw std::invalid_argument(
        "slice membership rejects the zero polynomial (trivially a member)");
  if (!q.is_homogeneous_of_degree(2))
    throw std::invalid_argument(
        "slice membership requires a homogeneous polynomial of degree 2");

  const std::uint64_t bound = generator_eord_bound(m);
  const Degree2Slice slice = Degree2Slice::for_query(m, q);

  SliceCertificate cert;
  cert.m = m;

  for (const auto& [t, c] : q.entries()) {
    auto it = slice.basis_index().find(t);
    if (it == slice.basis_index().end()) {
      // Not a shifted witness monomial of any A_1..A_m. Either its effective
      // order exceeds the generator bound, or its index pattern never occurs
      // in the family at all.
      std::ostringstream reason;
      const std::uint64_t e = t.eord();
      if (e > bound)
        reason << "effective order " << e << " exceeds the generator bound "
               << bound;
      else
        reason << "monomial is not a shifted witness monomial of the first "
               << m << " generators";
      cert.verdict = SliceCertificate::Verdict::non_member;
      cert.alien = AlienMonomial{t, e, bound, reason.str()};
      return cert;
    }
    const auto& entry = it->second;
    Rational partner_coeff = q.coefficient(entry.partner);
    if (partner_coeff != c) {
      cert.verdict = SliceCertificate::Verdict::non_member;
      cert.pairing = PairingViolation{t, entry.partner, c, partner_coeff};
      return cert;
    }
    if (entry.low)
      cert.coefficients.push_back({entry.generator, entry.shift, c});
  }

  cert.verdict = SliceCertificate::Verdict::member;
  return cert;
}

DiffPoly reconstruct_slice_member(const SliceCertificate& cert) {
  if (!cert.is_member())
    throw std::invalid_argument("only member certificates reconstruct");
  DiffPoly sum;
  for (const auto& [i, j, value] : cert.coefficients)
    sum += value * make_A(i).shifted(j);
  return sum;
}

}  // namespace diffalg
