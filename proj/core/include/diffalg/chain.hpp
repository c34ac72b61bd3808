#pragma once

#include "diffalg/slice.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace diffalg {

/// Per-m evidence that A_{m+1} does not lie in the mixed closure of
/// {A_1,...,A_m}: every term of every generator has effective order at most
/// max_eord_bound (measured over the actual generators), while the
/// separator A_{m+1} carries two terms of strictly larger effective orders
/// and its degree-2 slice verdict is non-member. Inclusion of each ideal in
/// the next is syntactic: the generator lists are nested by construction.
struct ChainCertificate {
  std::uint64_t m = 0;
  std::vector<std::string> generators;  // canonical text of A_1..A_m
  std::uint64_t max_eord_bound = 0;     // measured, equals 2^{2m-1}
  std::string separator;                // canonical text of A_{m+1}
  std::array<std::uint64_t, 2> separator_eords{};  // ascending
  SliceCertificate refutation;

  /// Both separator effective orders exceed the measured bound and the
  /// slice verdict is non-member.
  bool strict() const;
};

/// Builds one certificate per m = 1..m_max. Throws std::invalid_argument
/// for m_max == 0 and std::overflow_error when the indices of A_{m_max+1}
/// do not fit the native unsigned range (m_max > 30).
std::vector<ChainCertificate> acc_chain_experiment(std::uint64_t m_max);

}  // namespace diffalg
