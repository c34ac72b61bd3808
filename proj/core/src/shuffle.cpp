#include "diffalg/shuffle.hpp"

#include "diffalg/slice.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace diffalg {

namespace {

void sort_dedup(std::vector<DiffPoly>& gens) {
  std::erase_if(gens, [](const DiffPoly& g) { return g.is_zero(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

// Explicit membership certificate for a product a*b where one factor is a
// stage generator: a*b = sum over terms t of the other factor of
// c_t * t * shift(gen, 0). Avoids the linear solve for the witnesses the
// default enumeration produces.
std::optional<Combination> generator_product_certificate(
    const DiffPoly& a, const DiffPoly& b, const SigmaIdealPresentation& pres) {
  const auto& gens = pres.generators();
  auto build = [&](const DiffPoly& gen, const DiffPoly& other) {
    const std::size_t gi = static_cast<std::size_t>(
        std::lower_bound(gens.begin(), gens.end(), gen) - gens.begin());
    Combination c;
    for (const auto& [t, coeff] : other.entries())
      c.push_back({coeff, t, gi, 0});
    return c;
  };
  if (pres.contains_generator(a)) return build(a, b);
  if (pres.contains_generator(b)) return build(b, a);
  return std::nullopt;
}

}  // namespace

ShuffleState ShuffleState::initial(std::vector<DiffPoly> generators,
                                   ShuffleBounds bounds) {
  ShuffleState s;
  s.stage = 0;
  s.generators = std::move(generators);
  sort_dedup(s.generators);
  s.bounds = bounds;
  return s;
}

ShuffleState shuffle_step(const ShuffleState& state,
                          const std::vector<ProductWitness>& witnesses) {
  const SigmaIdealPresentation pres(state.generators);
  const MembershipBounds mb{state.bounds.max_index, state.bounds.extra_degree};

  ShuffleState next;
  next.stage = state.stage + 1;
  next.bounds = state.bounds;
  next.generators = state.generators;  // every s is s*1 with shift(1,1) == 1

  for (const auto& w : witnesses) {
    const DiffPoly product = w.a * w.b;
    if (product.is_zero()) {
      // a*b == 0 lies in every ideal and a*shift(b,1) == 0 emits nothing.
      next.log.push_back({w.a, w.b, DiffPoly()});
      continue;
    }
    std::optional<Combination> cert = generator_product_certificate(w.a, w.b, pres);
    if (!cert) cert = bounded_ideal_membership(product, pres, mb);
    if (!cert) {
      next.rejected.push_back(
          {w.a, w.b, "product not certified in the stage ideal within bounds"});
      continue;
    }
    DiffPoly emitted = w.a * w.b.shifted(1);
    next.log.push_back({w.a, w.b, emitted});
    if (emitted.max_index() <= state.bounds.max_index)
      next.generators.push_back(std::move(emitted));
  }
  sort_dedup(next.generators);
  return next;
}

std::vector<ProductWitness> default_witnesses(const ShuffleState& state) {
  std::vector<ProductWitness> ws;
  const DiffPoly one = DiffPoly::constant(1);
  for (const DiffPoly& g : state.generators) {
    ws.push_back({g, one});
    for (std::uint64_t d = 1; d <= state.bounds.extra_degree; ++d) {
      // Terms of degree d: nondecreasing index tuples over 0..max_index.
      std::vector<VarIndex> tuple(d, 0);
      while (true) {
        std::vector<Term::Factor> fs;
        for (VarIndex v : tuple) fs.emplace_back(v, 1);
        ws.push_back({g, DiffPoly::monomial(Term::from_factors(std::move(fs)))});
        std::size_t i = d;
        while (i > 0 && tuple[i - 1] == state.bounds.max_index) --i;
        if (i == 0) break;
        const VarIndex v = tuple[i - 1] + 1;
        for (std::size_t k = i - 1; k < d; ++k) tuple[k] = v;
      }
    }
  }
  return ws;
}

std::vector<ShuffleState> run_shuffle(std::uint64_t m, std::uint64_t n_iter,
                                      ShuffleBounds bounds) {
  std::vector<DiffPoly> gens;
  for (std::uint64_t i = 1; i <= m; ++i) gens.push_back(make_A(i));
  std::vector<ShuffleState> stages;
  stages.push_back(ShuffleState::initial(std::move(gens), bounds));
  for (std::uint64_t n = 0; n < n_iter; ++n)
    stages.push_back(shuffle_step(stages.back(), default_witnesses(stages.back())));
  return stages;
}

ScanReport shuffle_degree2_audit(const std::vector<ShuffleState>& stages,
                                 std::uint64_t m) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.scan = "shuffle-degree2-closure";
  report.params = {{"m", m},
                   {"stages", stages.empty() ? 0 : stages.size() - 1}};

  for (const ShuffleState& stage : stages) {
    for (std::size_t gi = 0; gi < stage.generators.size(); ++gi) {
      const DiffPoly& g = stage.generators[gi];
      if (g.min_term_degree() < 2) {
        ++report.violation_count;
        if (report.violations.size() < ScanReport::kViolationCap)
          report.violations.push_back(
              {"degree-below-2",
               {stage.stage, gi},
               "stage polynomial " + g.str() + " has a term of degree < 2"});
        continue;
      }
      if (!g.is_homogeneous_of_degree(2)) continue;
      const SliceCertificate cert = degree2_slice_membership(g, m);
      if (!cert.is_member()) {
        ++report.violation_count;
        if (report.violations.size() < ScanReport::kViolationCap)
          report.violations.push_back(
              {"slice-non-member",
               {stage.stage, gi},
               "degree-2 stage polynomial " + g.str() +
                   " is outside the degree-2 slice"});
      }
    }
    if (!stage.rejected.empty()) {
      ++report.violation_count;
      if (report.violations.size() < ScanReport::kViolationCap)
        report.violations.push_back(
            {"witness-rejected",
             {stage.stage, stage.rejected.size()},
             "stage has uncertified product witnesses"});
    }
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

ScanReport verify_shuffle_degree2_closure(std::uint64_t m, std::uint64_t n_iter,
                                          ShuffleBounds bounds) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report = shuffle_degree2_audit(run_shuffle(m, n_iter, bounds), m);
  report.params.push_back({"iters", n_iter});
  report.params.push_back({"max_index", bounds.max_index});
  report.params.push_back({"extra_degree", bounds.extra_degree});
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace diffalg
