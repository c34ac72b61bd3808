#include "diffalg/gram.hpp"

#include "diffalg/parse.hpp"
#include "diffalg/witness.hpp"
#include "support/testgen.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace diffalg;

namespace {

const QuadraticFactorization* as_split(const FactorResult& r) {
  return std::get_if<QuadraticFactorization>(&r);
}
const IrreducibilityCertificate* as_irreducible(const FactorResult& r) {
  return std::get_if<IrreducibilityCertificate>(&r);
}
const ExtensionSplit* as_extension(const FactorResult& r) {
  return std::get_if<ExtensionSplit>(&r);
}

}  // namespace

TEST_CASE("gram matrix convention") {
  const GramMatrix g = gram_matrix(parse_poly("y0^2 + 3*y0*y2 - y2^2"));
  REQUIRE(g.support == std::vector<VarIndex>{0, 2});
  CHECK(g.entries[0][0] == 1);
  CHECK(g.entries[1][1] == -1);
  CHECK(g.entries[0][1] == Rational(3, 2));
  CHECK(g.entries[1][0] == Rational(3, 2));
  CHECK_THROWS_AS(gram_matrix(parse_poly("y0*y1*y2")), std::invalid_argument);
  CHECK_THROWS_AS(gram_matrix(DiffPoly()), std::invalid_argument);
}

TEST_CASE("a bare product of two variables splits") {
  const FactorResult r = factor_quadratic(parse_poly("y0*y1"));
  const auto* f = as_split(r);
  REQUIRE(f);
  CHECK(gram_matrix(parse_poly("y0*y1")).rank() == 2);
  CHECK(f->left * f->right == parse_poly("y0*y1"));
}

TEST_CASE("the first witness polynomial is irreducible with rank 4") {
  const DiffPoly a1 = make_A(1);
  CHECK(gram_matrix(a1).rank() == 4);
  const auto* cert = as_irreducible(factor_quadratic(a1));
  REQUIRE(cert);
  CHECK(cert->rank == 4);
}

TEST_CASE("constructed products are recovered") {
  const DiffPoly q = parse_poly("y0*y1 + y0*y4 + y1*y2 + y2*y4");  // (y0+y2)(y1+y4)
  CHECK(gram_matrix(q).rank() == 2);
  const auto* f = as_split(factor_quadratic(q));
  REQUIRE(f);
  CHECK(f->left * f->right == q);
  // all four linear coefficients are 1
  CHECK(f->left == parse_poly("y0 + y2"));
  CHECK(f->right == parse_poly("y1 + y4"));
}

TEST_CASE("sums of two squares need a quadratic extension") {
  const FactorResult r = factor_quadratic(parse_poly("y0^2 + y1^2"));
  const auto* e = as_extension(r);
  REQUIRE(e);
  CHECK(e->rank == 2);
  CHECK(e->discriminant == -4);
  CHECK(!is_rational_square(e->discriminant));

  const auto* e2 = as_extension(factor_quadratic(parse_poly("y0^2 - 2*y1^2")));
  REQUIRE(e2);
  CHECK(e2->discriminant == 8);  // splits over Q(sqrt 2)
}

TEST_CASE("rational rank-2 splits with non-unit coefficients") {
  const DiffPoly q = parse_poly("y0^2 - y1^2");
  const auto* f = as_split(factor_quadratic(q));
  REQUIRE(f);
  CHECK(f->left * f->right == q);

  // (2y0 + 3y2)(y1 + 5y4) expanded
  const DiffPoly p =
      parse_poly("2*y0*y1 + 10*y0*y4 + 3*y1*y2 + 15*y2*y4");
  const auto* g = as_split(factor_quadratic(p));
  REQUIRE(g);
  CHECK(g->left * g->right == p);
  // normalization: the right factor is monic in its smallest variable
  CHECK(g->right.entries().front().second == 1);
}

TEST_CASE("perfect squares and single monomials") {
  const DiffPoly sq = parse_poly("y0^2 + 2*y0*y1 + y1^2");  // (y0+y1)^2
  CHECK(gram_matrix(sq).rank() == 1);
  const auto* f = as_split(factor_quadratic(sq));
  REQUIRE(f);
  CHECK(f->left * f->right == sq);

  const auto* m = as_split(factor_quadratic(parse_poly("9*y3^2")));
  REQUIRE(m);
  CHECK(m->left * m->right == parse_poly("9*y3^2"));
}

TEST_CASE("property: random products of linear forms always split back") {
  testgen::Rng rng(0xfac7);
  for (int iter = 0; iter < 200; ++iter) {
    DiffPoly l1, l2;
    const std::size_t vars = rng.range(1, 4);
    for (std::size_t v = 0; v < vars; ++v) {
      l1 += DiffPoly::monomial(Term::variable(rng.below(8)), rng.rational(5, 3));
      l2 += DiffPoly::monomial(Term::variable(rng.below(8)), rng.rational(5, 3));
    }
    if (l1.is_zero() || l2.is_zero()) continue;
    const DiffPoly q = l1 * l2;
    CHECK(gram_matrix(q).rank() <= 2);
    const auto* f = as_split(factor_quadratic(q));
    REQUIRE(f);
    CHECK(f->left * f->right == q);
  }
}

TEST_CASE("property: witness-shift combinations always have rank >= 3") {
  testgen::Rng rng(0x1e33);
  for (int iter = 0; iter < 150; ++iter) {
    const std::uint64_t m = rng.range(1, 4);
    DiffPoly q;
    const std::size_t parts = rng.range(1, 4);
    for (std::size_t i = 0; i < parts; ++i)
      q += rng.nonzero_rational(9, 1) *
           make_A(rng.range(1, m)).shifted(rng.below(17));
    if (q.is_zero()) continue;
    const std::size_t rank = gram_matrix(q).rank();
    CHECK(rank >= 3);
    CHECK(as_irreducible(factor_quadratic(q)));
    // disjoint supports force rank = 2 * (number of monomials present)
    CHECK(rank == 2 * q.term_count());
  }
}
