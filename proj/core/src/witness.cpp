#include "diffalg/witness.hpp"

#include <bit>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

namespace diffalg {

namespace {

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void add_violation(ScanReport& report, ScanViolation v) {
  ++report.violation_count;
  if (report.violations.size() < ScanReport::kViolationCap)
    report.violations.push_back(std::move(v));
}

}  // namespace

Term witness_term(std::uint64_t family, std::uint64_t shift) {
  if (family > 62)
    throw std::overflow_error(
        "witness family index too large for the native unsigned range");
  std::uint64_t lo = family + (std::uint64_t{1} << family) - 1;
  std::uint64_t hi = family + (std::uint64_t{1} << (family + 1)) - 1;
  return Term::of({{lo, 1}, {hi, 1}}).shifted(shift);
}

DiffPoly make_u(std::uint64_t n) {
  Term t = witness_term(n, 0);
  if (t.eord() != (std::uint64_t{1} << n))
    throw std::logic_error("witness term effective order mismatch");
  return DiffPoly::monomial(std::move(t));
}

DiffPoly make_A(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("witness polynomials start at n = 1");
  DiffPoly from_u = make_u(2 * n - 2) + make_u(2 * n - 1);

  // Equivalent closed-form index expressions; the exponents 2n-2..2n fit
  // because make_u(2n-1) above already required 2n-1 <= 62. The 2n-3 offset
  // is negative for n = 1, so the sums are formed in signed arithmetic.
  auto idx = [](std::int64_t off, std::uint64_t exp) {
    return static_cast<VarIndex>(off + static_cast<std::int64_t>(std::uint64_t{1} << exp));
  };
  std::int64_t s = static_cast<std::int64_t>(2 * n);
  DiffPoly closed =
      DiffPoly::monomial(Term::of({{idx(s - 3, 2 * n - 2), 1}, {idx(s - 3, 2 * n - 1), 1}})) +
      DiffPoly::monomial(Term::of({{idx(s - 2, 2 * n - 1), 1}, {idx(s - 2, 2 * n), 1}}));
  if (from_u != closed)
    throw std::logic_error("witness polynomial constructions disagree");
  return from_u;
}

std::optional<WitnessCoords> witness_term_coords(const Term& t) {
  const auto& fs = t.factors();
  if (fs.size() != 2 || fs[0].second != 1 || fs[1].second != 1) return std::nullopt;
  std::uint64_t a = fs[0].first;
  std::uint64_t e = fs[1].first - a;  // the effective order; e >= 1 here
  if (!std::has_single_bit(e)) return std::nullopt;
  std::uint64_t k = static_cast<std::uint64_t>(std::countr_zero(e));
  std::uint64_t base = k + e - 1;  // smallest index of the unshifted term
  if (a < base) return std::nullopt;
  return WitnessCoords{k, a - base};
}

ScanReport two_power_coincidence_scan(std::uint64_t max_exp, TupleMode mode) {
  if (mode == TupleMode::distinct && max_exp < 3)
    throw std::invalid_argument("distinct 4-tuples need max_exp >= 3");
  if (max_exp > 62)
    throw std::invalid_argument("max_exp > 62 would overflow the power table");

  Stopwatch clock;
  ScanReport report;
  report.scan = "two-power-coincidence";
  report.params = {{"max_exp", max_exp},
                   {"distinct", mode == TupleMode::distinct ? 1u : 0u}};

  std::vector<std::uint64_t> pw(max_exp + 1);
  for (std::uint64_t e = 0; e <= max_exp; ++e) pw[e] = std::uint64_t{1} << e;

  auto check = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c,
                   std::uint64_t d) {
    // All three identities rearranged into overflow-safe sums
    // (3 * 2^62 < 2^64).
    if (pw[b] + pw[c] == pw[d] + pw[a])
      add_violation(report, {"diff-diff",
                             {a, b, c, d},
                             "2^b - 2^a == 2^d - 2^c"});
    if (pw[b] == pw[a] + pw[c] + pw[d])
      add_violation(report, {"diff-sum",
                             {a, b, c, d},
                             "2^b - 2^a == 2^d + 2^c"});
    if (pw[a] + pw[b] == pw[c] + pw[d])
      add_violation(report, {"sum-sum",
                             {a, b, c, d},
                             "2^a + 2^b == 2^c + 2^d"});
  };

  for (std::uint64_t a = 0; a <= max_exp; ++a)
    for (std::uint64_t b = 0; b <= max_exp; ++b)
      for (std::uint64_t c = 0; c <= max_exp; ++c)
        for (std::uint64_t d = 0; d <= max_exp; ++d) {
          if (mode == TupleMode::distinct &&
              (a == b || a == c || a == d || b == c || b == d || c == d))
            continue;
          check(a, b, c, d);
        }

  report.elapsed_ms = clock.ms();
  return report;
}

ScanReport eord_distinctness_scan(std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (n_max > 62)
    throw std::invalid_argument("n_max > 62 would overflow witness indices");

  Stopwatch clock;
  ScanReport report;
  report.scan = "eord-distinctness";
  report.params = {{"n_max", n_max}};

  // Effective orders measured through the constructed terms, not assumed.
  std::vector<std::uint64_t> eords(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const DiffPoly u = make_u(n);
    eords[n] = u.entries().front().first.eord();
    if (eords[n] != (std::uint64_t{1} << n))
      add_violation(report, {"eord-formula",
                             {n, eords[n]},
                             "measured effective order differs from 2^n"});
  }

  std::map<std::uint64_t, std::uint64_t> seen;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    auto [it, inserted] = seen.emplace(eords[n], n);
    if (!inserted)
      add_violation(report, {"duplicate-eord",
                             {it->second, n, eords[n]},
                             "two witness terms share an effective order"});
  }

  for (std::uint64_t a = 0; a <= n_max; ++a)
    for (std::uint64_t b = 0; b <= n_max; ++b)
      for (std::uint64_t c = 0; c <= n_max; ++c)
        for (std::uint64_t d = 0; d <= n_max; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d)
            continue;
          std::uint64_t ea = eords[a], eb = eords[b], ec = eords[c],
                        ed = eords[d];
          if (eb + ec == ed + ea)
            add_violation(report, {"diff-diff",
                                   {a, b, c, d},
                                   "Eord(u_b) - Eord(u_a) == Eord(u_d) - Eord(u_c)"});
          if (eb == ea + ec + ed)
            add_violation(report, {"diff-sum",
                                   {a, b, c, d},
                                   "Eord(u_b) - Eord(u_a) == Eord(u_d) + Eord(u_c)"});
          if (ea + eb == ec + ed)
            add_violation(report, {"sum-sum",
                                   {a, b, c, d},
                                   "Eord(u_a) + Eord(u_b) == Eord(u_c) + Eord(u_d)"});
        }

  report.elapsed_ms = clock.ms();
  return report;
}

ScanReport monomial_injectivity_scan(
    std::uint64_t k_max, std::uint64_t j_max,
    const std::vector<std::pair<Term, WitnessCoords>>& extra) {
  Stopwatch clock;
  ScanReport report;
  report.scan = "monomial-injectivity";
  report.params = {{"k_max", k_max}, {"j_max", j_max}};

  std::map<Term, WitnessCoords> table;
  auto insert = [&](const Term& t, WitnessCoords coords) {
    auto [it, inserted] = table.emplace(t, coords);
    if (!inserted && it->second != coords) {
      std::ostringstream detail;
      detail << "term " << t.str() << " arises from two (family, shift) pairs";
      add_violation(report, {"collision",
                             {it->second.family, it->second.shift,
                              coords.family, coords.shift},
                             detail.str()});
    }
  };

  for (std::uint64_t k = 0; k <= k_max; ++k)
    for (std::uint64_t j = 0; j <= j_max; ++j)
      insert(witness_term(k, j), WitnessCoords{k, j});
  for (const auto& [t, coords] : extra) insert(t, coords);

  report.elapsed_ms = clock.ms();
  return report;
}

}  // namespace diffalg
