#include "diffalg/fforacle.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace diffalg {

namespace {

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  return mod_pow(a, p - 2, p);  // Fermat; p prime and a != 0 mod p
}

}  // namespace

std::uint32_t reduce_mod(const Rational& r, std::uint32_t prime) {
  const Integer p(prime);
  Integer den = denominator(r) % p;
  if (den == 0)
    throw std::invalid_argument("coefficient denominator not invertible mod " +
                                std::to_string(prime));
  Integer num = numerator(r) % p;
  if (num < 0) num += p;
  const std::uint32_t n = num.convert_to<std::uint32_t>();
  const std::uint32_t d = den.convert_to<std::uint32_t>();
  return static_cast<std::uint32_t>(std::uint64_t{n} * mod_inverse(d, prime) %
                                    prime);
}

DiffPoly FFLinearForm::lift() const {
  DiffPoly p;
  for (const auto& [idx, c] : coeffs)
    if (c != 0) p += DiffPoly::monomial(Term::variable(idx), Rational(c));
  return p;
}

std::optional<FFFactorization> finite_field_factor_oracle(const DiffPoly& q,
                                                          std::uint32_t prime) {
  if (q.is_zero() || !q.is_homogeneous_of_degree(2))
    throw std::invalid_argument(
        "expected a nonzero homogeneous polynomial of degree 2");
  if (!is_small_prime(prime) || prime > 65521)
    throw std::invalid_argument("prime must be a prime below 2^16");

  std::map<VarIndex, std::size_t> position;
  for (const auto& [t, c] : q.entries())
    for (const auto& [idx, exp] : t.factors()) position.emplace(idx, 0);
  const std::size_t s = position.size();
  if (s > 6)
    throw std::invalid_argument(
        "oracle support limited to 6 variables (cost grows like p^(2*support))");
  std::vector<VarIndex> support;
  support.reserve(s);
  for (auto& [idx, pos] : position) {
    pos = support.size();
    support.push_back(idx);
  }

  // Reduced coefficient tables: diag[i] for y_i^2, cross[i][j] for y_i*y_j.
  std::vector<std::uint32_t> diag(s, 0);
  std::vector<std::vector<std::uint32_t>> cross(s, std::vector<std::uint32_t>(s, 0));
  bool all_zero = true;
  for (const auto& [t, c] : q.entries()) {
    const std::uint32_t r = reduce_mod(c, prime);
    if (r != 0) all_zero = false;
    const auto& fs = t.factors();
    if (fs.size() == 1)
      diag[position[fs[0].first]] = r;
    else
      cross[position[fs[0].first]][position[fs[1].first]] = r;
  }
  if (all_zero)
    throw std::invalid_argument("polynomial vanishes mod " + std::to_string(prime));

  // All coefficient vectors in [0,p)^s, odometer order.
  std::vector<std::vector<std::uint32_t>> vectors;
  std::vector<std::uint32_t> v(s, 0);
  while (true) {
    vectors.push_back(v);
    std::size_t i = 0;
    while (i < s && ++v[i] == prime) v[i++] = 0;
    if (i == s) break;
  }

  auto first_nonzero_is_one = [&](const std::vector<std::uint32_t>& a) {
    for (std::uint32_t c : a)
      if (c != 0) return c == 1;
    return false;
  };

  const std::uint64_t p64 = prime;
  auto matches = [&](const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    for (std::size_t i = 0; i < s; ++i)
      if (std::uint64_t{a[i]} * b[i] % p64 != diag[i]) return false;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j)
        if ((std::uint64_t{a[i]} * b[j] + std::uint64_t{a[j]} * b[i]) % p64 !=
            cross[i][j])
          return false;
    return true;
  };

  // Exhaustive over all pairs up to scaling: any factorization can be
  // rescaled so the left factor's first nonzero coefficient is 1.
  std::vector<const std::vector<std::uint32_t>*> lefts, rights;
  for (const auto& w : vectors) {
    bool zero = true;
    for (std::uint32_t c : w)
      if (c != 0) {
        zero = false;
        break;
      }
    if (zero) continue;
    rights.push_back(&w);
    if (first_nonzero_is_one(w)) lefts.push_back(&w);
  }

  for (const auto* a : lefts) {
    for (const auto* b : rights) {
      if (!matches(*a, *b)) continue;
      FFFactorization f;
      f.prime = prime;
      for (std::size_t i = 0; i < s; ++i) {
        if ((*a)[i] != 0) f.left.coeffs.emplace_back(support[i], (*a)[i]);
        if ((*b)[i] != 0) f.right.coeffs.emplace_back(support[i], (*b)[i]);
      }
      return f;
    }
  }
  return std::nullopt;
}

}  // namespace diffalg
