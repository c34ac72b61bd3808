#include "diffalg/slice.hpp"

#include "diffalg/parse.hpp"
#include "support/testgen.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

using namespace diffalg;

namespace {

// Independent membership oracle: assemble the full basis-slice matrix over
// the shifts that could touch q (a shift j pushes every index to >= j, so
// j <= max_index(q) is exhaustive) and run a local Gaussian elimination.
// Deliberately avoids the pairing logic of the implementation under test.
struct OracleVerdict {
  bool member = false;
  DiffPoly reconstruction;
};

OracleVerdict slice_oracle(const DiffPoly& q, std::uint64_t m) {
  std::vector<DiffPoly> basis;
  for (std::uint64_t i = 1; i <= m; ++i)
    for (std::uint64_t j = 0; j <= q.max_index(); ++j)
      basis.push_back(make_A(i).shifted(j));

  std::map<Term, std::size_t> row_of;
  for (const auto& b : basis)
    for (const auto& [t, c] : b.entries()) row_of.emplace(t, 0);
  for (const auto& [t, c] : q.entries()) row_of.emplace(t, 0);
  std::size_t r = 0;
  for (auto& [t, idx] : row_of) idx = r++;

  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(basis.size() + 1));
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [t, c] : basis[col].entries()) a[row_of[t]][col] = c;
  for (const auto& [t, c] : q.entries()) a[row_of[t]][basis.size()] = c;

  // local forward elimination on the augmented matrix
  std::size_t rank = 0;
  for (std::size_t col = 0; col < basis.size() && rank < r; ++col) {
    std::size_t pivot = rank;
    while (pivot < r && a[pivot][col] == 0) ++pivot;
    if (pivot == r) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j <= basis.size(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  OracleVerdict v;
  for (std::size_t i = rank; i < r; ++i)
    if (a[i][basis.size()] != 0) return v;  // inconsistent: non-member
  v.member = true;

  // back out the combination to rebuild q independently
  std::vector<Rational> x(basis.size(), Rational(0));
  std::size_t row = 0;
  for (std::size_t col = 0; col < basis.size() && row < rank; ++col) {
    if (a[row][col] == 0) continue;
    x[col] = a[row][basis.size()] / a[row][col];
    ++row;
  }
  for (std::size_t col = 0; col < basis.size(); ++col)
    v.reconstruction += x[col] * basis[col];
  return v;
}

}  // namespace

TEST_CASE("a shifted generator is a member with coefficient 1") {
  const DiffPoly q = make_A(1).shifted(3);  // y3*y4 + y5*y7
  CHECK(q == parse_poly("y3*y4 + y5*y7"));
  const SliceCertificate cert = degree2_slice_membership(q, 1);
  REQUIRE(cert.is_member());
  REQUIRE(cert.coefficients.size() == 1);
  CHECK(cert.coefficients[0].generator == 1);
  CHECK(cert.coefficients[0].shift == 3);
  CHECK(cert.coefficients[0].value == 1);
  CHECK(reconstruct_slice_member(cert) == q);
}

TEST_CASE("the next witness polynomial is refuted by its effective order") {
  const SliceCertificate cert = degree2_slice_membership(make_A(2), 1);
  CHECK(!cert.is_member());
  REQUIRE(cert.alien.has_value());
  CHECK(cert.alien->monomial == Term::of({{5, 1}, {9, 1}}));
  CHECK(cert.alien->eord == 4);
  CHECK(cert.alien->eord_bound == 2);  // 2^{2m-1} for m = 1
  CHECK(!cert.pairing.has_value());
  // the independent oracle agrees
  CHECK(!slice_oracle(make_A(2), 1).member);
}

TEST_CASE("half of a generator is refuted by its missing partner") {
  const DiffPoly q = parse_poly("y0*y1");
  // oracle first: q is outside the span of {shift(A_1, j)}
  CHECK(!slice_oracle(q, 1).member);

  const SliceCertificate cert = degree2_slice_membership(q, 1);
  CHECK(!cert.is_member());
  REQUIRE(cert.pairing.has_value());
  CHECK(cert.pairing->present == Term::of({{0, 1}, {1, 1}}));
  CHECK(cert.pairing->partner == Term::of({{2, 1}, {4, 1}}));
  CHECK(cert.pairing->present_coeff == 1);
  CHECK(cert.pairing->partner_coeff == 0);
}

TEST_CASE("mismatched partner coefficients are refuted") {
  const DiffPoly q = parse_poly("y0*y1 + 2*y2*y4");
  CHECK(!slice_oracle(q, 1).member);
  const SliceCertificate cert = degree2_slice_membership(q, 1);
  CHECK(!cert.is_member());
  REQUIRE(cert.pairing.has_value());
  CHECK(cert.pairing->present_coeff != cert.pairing->partner_coeff);
}

TEST_CASE("contract errors") {
  CHECK_THROWS_AS(degree2_slice_membership(DiffPoly(), 1), std::invalid_argument);
  CHECK_THROWS_AS(degree2_slice_membership(parse_poly("y0"), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(degree2_slice_membership(parse_poly("y0*y1*y2"), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(degree2_slice_membership(parse_poly("y0*y1 + y2"), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(degree2_slice_membership(parse_poly("y0*y1"), 0),
                  std::invalid_argument);
}

TEST_CASE("basis supports are pairwise disjoint at scale") {
  for (std::uint64_t m = 1; m <= 6; ++m) {
    const Degree2Slice slice = Degree2Slice::over_shifts(m, 64);
    // every monomial appears exactly once; 2 per (i, j) pair
    CHECK(slice.basis_index().size() == 2 * m * 65);
    for (const auto& [t, entry] : slice.basis_index()) {
      CHECK(entry.generator >= 1);
      CHECK(entry.generator <= m);
      CHECK(t.eord() <= generator_eord_bound(m));
    }
  }
}

TEST_CASE("generator eord bound is measured as 2^{2m-1}") {
  CHECK(generator_eord_bound(1) == 2);
  CHECK(generator_eord_bound(2) == 8);
  CHECK(generator_eord_bound(6) == 2048);
  CHECK_THROWS_AS(generator_eord_bound(0), std::invalid_argument);
}

TEST_CASE("property: verdicts and reconstructions agree with the oracle") {
  testgen::Rng rng(0x511ce);
  int members = 0, non_members = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const std::uint64_t m = rng.range(1, 3);
    DiffPoly q;
    // random combination of basis elements, sometimes perturbed
    const std::size_t parts = rng.range(1, 4);
    for (std::size_t i = 0; i < parts; ++i)
      q += rng.nonzero_rational(9, 3) *
           make_A(rng.range(1, m)).shifted(rng.below(13));
    if (rng.below(3) == 0) {
      // break a pairing or add an alien monomial
      if (rng.flip())
        q += DiffPoly::monomial(witness_term(rng.below(2 * m), rng.below(13)),
                                rng.nonzero_rational(9, 3));
      else
        q += DiffPoly::monomial(Term::of({{0, 1}, {rng.range(2, 14), 1}}),
                                rng.nonzero_rational(9, 3));
    }
    if (q.is_zero() || !q.is_homogeneous_of_degree(2)) continue;

    const OracleVerdict expected = slice_oracle(q, m);
    const SliceCertificate cert = degree2_slice_membership(q, m);
    CHECK(cert.is_member() == expected.member);
    if (cert.is_member()) {
      ++members;
      CHECK(reconstruct_slice_member(cert) == q);
      CHECK(expected.reconstruction == q);
    } else {
      ++non_members;
      CHECK((cert.alien.has_value() || cert.pairing.has_value()));
    }
  }
  // both verdicts must actually occur for the comparison to mean anything
  CHECK(members > 10);
  CHECK(non_members > 10);
}
