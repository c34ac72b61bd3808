#include "diffalg/term.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace diffalg {

Term Term::variable(VarIndex k, Exponent e) {
  Term t;
  if (e > 0) t.factors_.emplace_back(k, e);
  return t;
}

Term Term::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Term t;
  for (const auto& [idx, exp] : factors) {
    if (exp == 0) continue;
    if (!t.factors_.empty() && t.factors_.back().first == idx)
      t.factors_.back().second += exp;
    else
      t.factors_.emplace_back(idx, exp);
  }
  return t;
}

Term Term::of(std::initializer_list<Factor> factors) {
  return from_factors(std::vector<Factor>(factors));
}

Exponent Term::exponent_of(VarIndex k) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), k,
                             [](const Factor& f, VarIndex v) { return f.first < v; });
  return (it != factors_.end() && it->first == k) ? it->second : 0;
}

Exponent Term::degree() const {
  Exponent d = 0;
  for (const auto& [idx, exp] : factors_) d += exp;
  return d;
}

std::uint64_t Term::eord() const {
  if (factors_.empty()) return 0;
  return factors_.back().first - factors_.front().first;
}

VarIndex Term::min_index() const {
  return factors_.empty() ? 0 : factors_.front().first;
}

VarIndex Term::max_index() const {
  return factors_.empty() ? 0 : factors_.back().first;
}

Term Term::shifted(std::uint64_t k) const {
  constexpr VarIndex kMax = std::numeric_limits<VarIndex>::max();
  Term t;
  t.factors_.reserve(factors_.size());
  for (const auto& [idx, exp] : factors_) {
    if (idx > kMax - k)
      throw std::overflow_error("term shift overflows the variable index range");
    t.factors_.emplace_back(idx + k, exp);
  }
  return t;
}

Term operator*(const Term& a, const Term& b) {
  Term r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first)
      r.factors_.push_back(*i++);
    else if (j->first < i->first)
      r.factors_.push_back(*j++);
    else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

std::strong_ordering Term::compare(const Term& a, const Term& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Equal degrees: lexicographic walk over the expanded index sequences,
  // consuming runs of equal indices without materializing them.
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  Exponent ri = 0, rj = 0;  // remaining exponent of the current runs
  while (true) {
    if (ri == 0) {
      if (i == a.factors_.end()) return std::strong_ordering::equal;
      ri = i->second;
    }
    if (rj == 0) rj = j->second;  // b cannot end first: degrees are equal
    if (auto c = i->first <=> j->first; c != 0) return c;
    Exponent step = std::min(ri, rj);
    ri -= step;
    rj -= step;
    if (ri == 0) ++i;
    if (rj == 0) ++j;
  }
}

std::string Term::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, exp] : factors_) {
    if (!first) os << '*';
    first = false;
    os << 'y' << idx;
    if (exp != 1) os << '^' << exp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << t.str();
}

}  // namespace diffalg
