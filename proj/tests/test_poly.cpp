#include "diffalg/poly.hpp"

#include "support/testgen.hpp"

#include <doctest.h>

using namespace diffalg;

namespace {
DiffPoly var(VarIndex k) { return DiffPoly::monomial(Term::variable(k)); }
}  // namespace

TEST_CASE("additive inverse cancels to the zero polynomial") {
  const DiffPoly p = DiffPoly::monomial(Term::of({{0, 1}, {1, 1}}));
  CHECK((p + Rational(-1) * p).is_zero());
  CHECK((p - p).is_zero());
}

TEST_CASE("multiplication distributes over the witness-shaped product") {
  const DiffPoly lhs = (var(0) + var(2)) * (var(1) + var(4));
  DiffPoly expected;
  expected += DiffPoly::monomial(Term::of({{0, 1}, {1, 1}}));
  expected += DiffPoly::monomial(Term::of({{0, 1}, {4, 1}}));
  expected += DiffPoly::monomial(Term::of({{1, 1}, {2, 1}}));
  expected += DiffPoly::monomial(Term::of({{2, 1}, {4, 1}}));
  CHECK(lhs == expected);
}

TEST_CASE("scalar action") {
  const DiffPoly two_sq = DiffPoly::monomial(Term::variable(0, 2), 2);
  CHECK(Rational(1, 2) * two_sq == DiffPoly::monomial(Term::variable(0, 2)));
  CHECK((Rational(0) * two_sq).is_zero());
}

TEST_CASE("normalizing constructor merges and drops zeros") {
  const Term t = Term::of({{0, 1}, {1, 1}});
  const DiffPoly p = DiffPoly::from_entries({{t, Rational(2)},
                                             {Term::variable(3), Rational(0)},
                                             {t, Rational(-2)},
                                             {Term::variable(5), Rational(1)}});
  CHECK(p == var(5));
  // re-normalizing canonical entries is the identity
  CHECK(DiffPoly::from_entries(p.entries()) == p);
}

TEST_CASE("shift examples") {
  const DiffPoly a1 = DiffPoly::monomial(Term::of({{0, 1}, {1, 1}})) +
                      DiffPoly::monomial(Term::of({{2, 1}, {4, 1}}));
  const DiffPoly shifted = DiffPoly::monomial(Term::of({{1, 1}, {2, 1}})) +
                           DiffPoly::monomial(Term::of({{3, 1}, {5, 1}}));
  CHECK(a1.shifted(1) == shifted);
  CHECK(a1.shifted(0) == a1);
}

TEST_CASE("homogeneity and degree queries") {
  const DiffPoly mixed = var(0) + DiffPoly::monomial(Term::variable(1, 2));
  CHECK(!mixed.is_homogeneous());
  CHECK(mixed.degree() == 2);
  CHECK(mixed.min_term_degree() == 1);
  const DiffPoly quad = DiffPoly::monomial(Term::of({{0, 1}, {9, 1}})) -
                        DiffPoly::monomial(Term::variable(4, 2));
  CHECK(quad.is_homogeneous_of_degree(2));
  CHECK(quad.max_index() == 9);
  CHECK(DiffPoly().is_homogeneous());
  CHECK(!DiffPoly().is_homogeneous_of_degree(0));
}

TEST_CASE("properties: shift is a ring endomorphism compatible with eord") {
  testgen::Rng rng(0xa5a5);
  for (int i = 0; i < 300; ++i) {
    const DiffPoly p = rng.poly(40, 3, 5);
    const DiffPoly q = rng.poly(40, 3, 5);
    const std::uint64_t k = rng.below(65);
    CHECK((p + q).shifted(k) == p.shifted(k) + q.shifted(k));
    CHECK((p * q).shifted(k) == p.shifted(k) * q.shifted(k));
    CHECK(p.shifted(k).shifted(7) == p.shifted(k + 7));
    // injectivity on samples: distinct polynomials stay distinct
    if (p != q) CHECK(p.shifted(k) != q.shifted(k));
  }
}

TEST_CASE("properties: ring axioms on random samples") {
  testgen::Rng rng(0x51de);
  for (int i = 0; i < 200; ++i) {
    const DiffPoly a = rng.poly(20, 3, 4, 50, 10);
    const DiffPoly b = rng.poly(20, 3, 4, 50, 10);
    const DiffPoly c = rng.poly(20, 3, 4, 50, 10);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}
