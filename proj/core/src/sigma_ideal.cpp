#include "diffalg/sigma_ideal.hpp"

#include "diffalg/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace diffalg {

SigmaIdealPresentation::SigmaIdealPresentation(std::vector<DiffPoly> generators)
    : generators_(std::move(generators)) {
  std::erase_if(generators_, [](const DiffPoly& g) { return g.is_zero(); });
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
}

bool SigmaIdealPresentation::contains_generator(const DiffPoly& g) const {
  return std::binary_search(generators_.begin(), generators_.end(), g);
}

DiffPoly expand_combination(const Combination& c,
                            const SigmaIdealPresentation& g) {
  DiffPoly sum;
  for (const auto& e : c)
    sum += e.coeff * (e.multiplier * g.generators().at(e.generator).shifted(e.shift));
  return sum;
}

namespace {

// All terms of exactly degree e on the variables y_0..y_max_index, in
// canonical order (nondecreasing index choices).
void terms_of_degree_rec(VarIndex max_index, std::uint64_t remaining,
                         VarIndex next, std::vector<Term::Factor>& acc,
                         std::vector<Term>& out) {
  if (remaining == 0) {
    out.push_back(Term::from_factors(acc));
    return;
  }
  for (VarIndex v = next; v <= max_index; ++v) {
    acc.emplace_back(v, 1);
    terms_of_degree_rec(max_index, remaining - 1, v, acc, out);
    acc.pop_back();
  }
}

std::vector<Term> terms_of_degree(VarIndex max_index, std::uint64_t e) {
  std::vector<Term> out;
  std::vector<Term::Factor> acc;
  terms_of_degree_rec(max_index, e, 0, acc, out);
  return out;
}

struct Candidate {
  Term multiplier;
  std::size_t generator;
  std::uint64_t shift;
  DiffPoly poly;
};

// Solves sum x_i * candidate_i == target exactly. Candidates whose support
// never connects to the target's support cannot occur in a minimal solution
// (their contribution sums to zero on its own), so the system is first
// restricted to the support-closure component of the target; this preserves
// solvability exactly and keeps the elimination small.
std::optional<Combination> solve_component(const DiffPoly& target,
                                           std::vector<Candidate> candidates) {
  std::map<Term, std::vector<std::size_t>> by_term;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (const auto& [t, c] : candidates[i].poly.entries())
      by_term[t].push_back(i);

  std::set<Term> monomials;
  std::vector<bool> kept(candidates.size(), false);
  std::vector<std::size_t> kept_order;
  std::deque<Term> queue;
  for (const auto& [t, c] : target.entries()) {
    monomials.insert(t);
    queue.push_back(t);
  }
  while (!queue.empty()) {
    Term t = std::move(queue.front());
    queue.pop_front();
    auto it = by_term.find(t);
    if (it == by_term.end()) continue;
    for (std::size_t i : it->second) {
      if (kept[i]) continue;
      kept[i] = true;
      kept_order.push_back(i);
      for (const auto& [ct, cc] : candidates[i].poly.entries())
        if (monomials.insert(ct).second) queue.push_back(ct);
    }
  }
  std::sort(kept_order.begin(), kept_order.end());

  std::vector<Term> rows(monomials.begin(), monomials.end());
  std::map<Term, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;

  RationalMatrix a(rows.size(), std::vector<Rational>(kept_order.size(), Rational(0)));
  for (std::size_t col = 0; col < kept_order.size(); ++col)
    for (const auto& [t, c] : candidates[kept_order[col]].poly.entries())
      a[row_of[t]][col] = c;
  std::vector<Rational> b(rows.size(), Rational(0));
  for (const auto& [t, c] : target.entries()) b[row_of[t]] = c;

  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) return std::nullopt;

  Combination result;
  for (std::size_t col = 0; col < kept_order.size(); ++col) {
    if ((*x)[col] == 0) continue;
    const Candidate& cand = candidates[kept_order[col]];
    result.push_back({(*x)[col], cand.multiplier, cand.generator, cand.shift});
  }
  return result;
}

}  // namespace

std::optional<Combination> bounded_ideal_membership(
    const DiffPoly& p, const SigmaIdealPresentation& g, MembershipBounds b) {
  if (p.is_zero())
    throw std::invalid_argument("membership query must be nonzero");
  for (const auto& gen : g.generators())
    if (!gen.is_homogeneous())
      throw std::invalid_argument(
          "bounded membership requires homogeneous generators, got " + gen.str());

  // Homogeneous components of p, solved independently degree by degree.
  std::map<Exponent, std::vector<DiffPoly::Entry>> split;
  for (const auto& e : p.entries()) split[e.first.degree()].push_back(e);

  // Multiplier terms per extra degree, shared across components.
  std::map<std::uint64_t, std::vector<Term>> multipliers;

  Combination combination;
  for (const auto& [d, entries] : split) {
    DiffPoly component = DiffPoly::from_entries(entries);
    std::vector<Candidate> candidates;
    for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
      const DiffPoly& gen = g.generators()[gi];
      const Exponent dg = gen.degree();
      if (dg > d) continue;
      const std::uint64_t e = d - dg;
      if (e > b.extra_degree) continue;
      if (gen.max_index() > b.max_index) continue;
      auto [it, fresh] = multipliers.try_emplace(e);
      if (fresh) it->second = terms_of_degree(b.max_index, e);
      // Shifts of a constant generator are all identical.
      const std::uint64_t max_shift =
          gen.degree() == 0 ? 0 : b.max_index - gen.max_index();
      for (std::uint64_t j = 0; j <= max_shift; ++j) {
        DiffPoly shifted = gen.shifted(j);
        for (const Term& t : it->second)
          candidates.push_back({t, gi, j, t * shifted});
      }
    }
    auto part = solve_component(component, std::move(candidates));
    if (!part) return std::nullopt;
    combination.insert(combination.end(), part->begin(), part->end());
  }

  if (expand_combination(combination, g) != p)
    throw std::logic_error("membership certificate failed re-expansion");
  return combination;
}

std::optional<Combination> colon_membership(const DiffPoly& a,
                                            const DiffPoly& s,
                                            const SigmaIdealPresentation& g,
                                            MembershipBounds b) {
  DiffPoly product = a * s;
  if (product.is_zero()) return Combination{};  // 0 lies in every ideal
  return bounded_ideal_membership(product, g, b);
}

}  // namespace diffalg
