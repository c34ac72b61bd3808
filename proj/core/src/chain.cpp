#include "diffalg/chain.hpp"

#include "diffalg/witness.hpp"

#include <stdexcept>

namespace diffalg {

bool ChainCertificate::strict() const {
  return separator_eords[0] > max_eord_bound &&
         separator_eords[1] > max_eord_bound &&
         refutation.verdict == SliceCertificate::Verdict::non_member;
}

std::vector<ChainCertificate> acc_chain_experiment(std::uint64_t m_max) {
  if (m_max == 0) throw std::invalid_argument("m_max must be >= 1");
  // Fail fast on index overflow before doing any work: the last certificate
  // needs the separator A_{m_max+1}.
  if (m_max > 30)
    throw std::overflow_error(
        "indices of the separator witness polynomial exceed the native "
        "unsigned range for m_max > 30");

  std::vector<ChainCertificate> certs;
  certs.reserve(m_max);
  std::vector<std::string> generators;
  std::uint64_t measured_bound = 0;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    const DiffPoly a_m = make_A(m);
    generators.push_back(a_m.str());
    for (const auto& [t, c] : a_m.entries())
      measured_bound = std::max(measured_bound, t.eord());

    const DiffPoly separator = make_A(m + 1);
    ChainCertificate cert;
    cert.m = m;
    cert.generators = generators;  // nested by construction: prefix of the next
    cert.max_eord_bound = measured_bound;
    cert.separator = separator.str();
    cert.separator_eords = {separator.entries()[0].first.eord(),
                            separator.entries()[1].first.eord()};
    if (cert.separator_eords[0] > cert.separator_eords[1])
      std::swap(cert.separator_eords[0], cert.separator_eords[1]);
    cert.refutation = degree2_slice_membership(separator, m);
    certs.push_back(std::move(cert));
  }
  return certs;
}

}  // namespace diffalg
