#include "diffalg/term.hpp"

#include "support/testgen.hpp"

#include <doctest.h>

#include <limits>
#include <stdexcept>

using namespace diffalg;

TEST_CASE("degree sums exponents") {
  CHECK(Term::of({{0, 1}, {1, 1}}).degree() == 2);
  CHECK(Term().degree() == 0);
  CHECK(Term::of({{0, 2}, {3, 1}}).degree() == 3);
}

TEST_CASE("effective order is max index minus min index") {
  CHECK(Term::of({{2, 1}, {4, 1}}).eord() == 2);
  CHECK(Term::variable(5).eord() == 0);
  CHECK(Term::of({{0, 2}, {3, 1}}).eord() == 3);
  CHECK(Term().eord() == 0);  // constant term, by convention
}

TEST_CASE("construction normalizes") {
  CHECK(Term::of({{3, 1}, {0, 2}}) == Term::of({{0, 2}, {3, 1}}));
  CHECK(Term::of({{1, 1}, {1, 2}}) == Term::variable(1, 3));
  CHECK(Term::of({{4, 0}}) == Term());
  CHECK(Term::variable(7, 0) == Term());
}

TEST_CASE("multiplication merges exponents") {
  CHECK(Term::variable(0) * Term::variable(1) == Term::of({{0, 1}, {1, 1}}));
  CHECK(Term::variable(2) * Term::variable(2) == Term::variable(2, 2));
  CHECK(Term() * Term::variable(3) == Term::variable(3));
}

TEST_CASE("shift adds to every index and checks overflow") {
  CHECK(Term::of({{0, 1}, {1, 1}}).shifted(3) == Term::of({{3, 1}, {4, 1}}));
  CHECK(Term::variable(2, 5).shifted(0) == Term::variable(2, 5));
  CHECK(Term().shifted(10) == Term());
  const VarIndex top = std::numeric_limits<VarIndex>::max();
  CHECK_THROWS_AS(Term::variable(top).shifted(1), std::overflow_error);
  CHECK_THROWS_AS(Term::variable(10).shifted(top), std::overflow_error);
}

TEST_CASE("canonical order is graded then lexicographic on index sequences") {
  // y0^2 < y0*y1 < y1^2 < y0*y5 < y2*y4
  CHECK(Term::variable(0, 2) < Term::of({{0, 1}, {1, 1}}));
  CHECK(Term::of({{0, 1}, {1, 1}}) < Term::variable(1, 2));
  CHECK(Term::variable(1, 2) < Term::of({{0, 1}, {5, 1}}));
  CHECK(Term::of({{0, 1}, {5, 1}}) < Term::of({{2, 1}, {4, 1}}));
  // grading dominates: any degree-1 term precedes any degree-2 term
  CHECK(Term::variable(9) < Term::variable(0, 2));
  CHECK(Term() < Term::variable(0));
}

TEST_CASE("properties: degree is additive, eord shift-invariant, order total") {
  testgen::Rng rng(0x7e31);
  for (int i = 0; i < 500; ++i) {
    const Term s = rng.term(64, 4);
    const Term t = rng.term(64, 4);
    CHECK((s * t).degree() == s.degree() + t.degree());
    const std::uint64_t k = rng.below(65);
    CHECK(t.shifted(k).eord() == t.eord());
    // multiplicativity of the order (used by exact division)
    if (s != t) {
      const Term u = rng.term(32, 3);
      const bool lt = s < t;
      CHECK((s * u < t * u) == lt);
    }
  }
}
