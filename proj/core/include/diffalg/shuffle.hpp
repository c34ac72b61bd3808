#pragma once

#include "diffalg/poly.hpp"
#include "diffalg/sigma_ideal.hpp"
#include "diffalg/witness.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace diffalg {

/// A claimed product decomposition a*b of an element of the current stage
/// ideal. Accepting the witness emits a*shift(b,1) into the next stage.
struct ProductWitness {
  DiffPoly a;
  DiffPoly b;
};

/// Enumeration window for shuffle stages: emitted generators with variable
/// indices beyond max_index are filtered out, and witness certification
/// searches within (max_index, extra_degree).
struct ShuffleBounds {
  VarIndex max_index = 0;
  std::uint64_t extra_degree = 1;
};

struct AppliedWitness {
  DiffPoly a;
  DiffPoly b;
  DiffPoly emitted;  // a * shift(b, 1); may be bound-filtered afterwards
};

struct RejectedWitness {
  DiffPoly a;
  DiffPoly b;
  std::string reason;
};

/// Stage n of the shuffling iteration towards the mixed closure: the
/// generator list presents the sigma-ideal of stage n up to the enumeration
/// bounds. Stage 0 generators are the input set exactly; every later
/// generator is a*shift(b,1) for a witness whose product a*b was certified
/// to lie in the previous stage's ideal, so every stage stays inside the
/// mixed closure of the input by construction.
struct ShuffleState {
  std::uint64_t stage = 0;
  std::vector<DiffPoly> generators;  // deduplicated, presentation-sorted
  ShuffleBounds bounds;
  std::vector<AppliedWitness> log;
  std::vector<RejectedWitness> rejected;

  static ShuffleState initial(std::vector<DiffPoly> generators,
                              ShuffleBounds bounds);
};

/// One shuffling step. For each witness (a, b):
///   - certify a*b in the stage ideal (generator fast path, then bounded
///     membership search); uncertifiable witnesses land in `rejected`,
///     never silently dropped;
///   - emit a*shift(b,1), bound-filtered by max_index.
/// The next stage's generators are the previous ones (every s is s*1 with
/// shift(1,1) == 1, so retention needs no search) plus the accepted
/// emissions, deduplicated and presentation-sorted.
ShuffleState shuffle_step(const ShuffleState& state,
                          const std::vector<ProductWitness>& witnesses);

/// The default witness enumeration: (g, t) for every current generator g
/// and every term t of degree 1..extra_degree with indices <= max_index,
/// plus the identity witnesses (g, 1).
std::vector<ProductWitness> default_witnesses(const ShuffleState& state);

/// Runs n_iter default-enumeration shuffle steps starting from
/// {A_1, ..., A_m}; returns all states, stage 0 first.
std::vector<ShuffleState> run_shuffle(std::uint64_t m, std::uint64_t n_iter,
                                      ShuffleBounds bounds);

/// Audits a shuffle run: every degree-2 homogeneous generator produced at
/// any stage must certify into the degree-2 slice of [A_1..A_m]
/// ("slice-non-member" violations otherwise), and no stage may contain a
/// polynomial with a term of degree < 2 ("degree-below-2" violations).
ScanReport shuffle_degree2_audit(const std::vector<ShuffleState>& stages,
                                 std::uint64_t m);

/// run_shuffle + shuffle_degree2_audit in one call.
ScanReport verify_shuffle_degree2_closure(std::uint64_t m,
                                          std::uint64_t n_iter,
                                          ShuffleBounds bounds);

}  // namespace diffalg
