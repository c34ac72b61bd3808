#include "diffalg/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace diffalg {

DiffPoly DiffPoly::constant(Rational c) {
  return monomial(Term(), std::move(c));
}

DiffPoly DiffPoly::monomial(Term t, Rational c) {
  DiffPoly p;
  if (c != 0) p.entries_.emplace_back(std::move(t), std::move(c));
  return p;
}

DiffPoly DiffPoly::from_entries(std::vector<Entry> entries) {
  std::map<Term, Rational> acc;
  for (auto& [t, c] : entries) acc[std::move(t)] += c;
  DiffPoly p;
  for (auto& [t, c] : acc)
    if (c != 0) p.entries_.emplace_back(t, std::move(c));
  return p;
}

Rational DiffPoly::coefficient(const Term& t) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), t,
      [](const Entry& e, const Term& key) { return e.first < key; });
  return (it != entries_.end() && it->first == t) ? it->second : Rational(0);
}

Exponent DiffPoly::degree() const {
  Exponent d = 0;
  for (const auto& [t, c] : entries_) d = std::max(d, t.degree());
  return d;
}

Exponent DiffPoly::min_term_degree() const {
  if (entries_.empty()) return 0;
  // Graded term order: the first entry has the smallest degree.
  return entries_.front().first.degree();
}

bool DiffPoly::is_homogeneous() const {
  return entries_.empty() ||
         entries_.front().first.degree() == entries_.back().first.degree();
}

bool DiffPoly::is_homogeneous_of_degree(Exponent d) const {
  return !entries_.empty() && is_homogeneous() &&
         entries_.front().first.degree() == d;
}

VarIndex DiffPoly::max_index() const {
  VarIndex m = 0;
  for (const auto& [t, c] : entries_) m = std::max(m, t.max_index());
  return m;
}

DiffPoly DiffPoly::shifted(std::uint64_t k) const {
  DiffPoly p;
  p.entries_.reserve(entries_.size());
  // Shifting all indices by k preserves the term order, so the list stays
  // sorted and canonical.
  for (const auto& [t, c] : entries_) p.entries_.emplace_back(t.shifted(k), c);
  return p;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly p;
  p.entries_.reserve(entries_.size());
  for (const auto& [t, c] : entries_) p.entries_.emplace_back(t, -c);
  return p;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  r.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first < j->first)
      r.entries_.push_back(*i++);
    else if (j->first < i->first)
      r.entries_.push_back(*j++);
    else {
      Rational c = i->second + j->second;
      if (c != 0) r.entries_.emplace_back(i->first, std::move(c));
      ++i, ++j;
    }
  }
  r.entries_.insert(r.entries_.end(), i, a.entries_.end());
  r.entries_.insert(r.entries_.end(), j, b.entries_.end());
  return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return a + (-b); }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  std::map<Term, Rational> acc;
  for (const auto& [ta, ca] : a.entries_)
    for (const auto& [tb, cb] : b.entries_) acc[ta * tb] += ca * cb;
  DiffPoly r;
  for (auto& [t, c] : acc)
    if (c != 0) r.entries_.emplace_back(t, std::move(c));
  return r;
}

DiffPoly operator*(const Rational& c, const DiffPoly& p) {
  if (c == 0) return {};
  DiffPoly r;
  r.entries_.reserve(p.entries_.size());
  for (const auto& [t, pc] : p.entries_) r.entries_.emplace_back(t, c * pc);
  return r;
}

DiffPoly operator*(const DiffPoly& p, const Rational& c) { return c * p; }

DiffPoly operator*(const Term& t, const DiffPoly& p) {
  // Multiplying every term by t preserves the graded-lex order.
  DiffPoly r;
  r.entries_.reserve(p.entries_.size());
  for (const auto& [pt, pc] : p.entries_) r.entries_.emplace_back(t * pt, pc);
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  *this = *this + o;
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  *this = *this - o;
  return *this;
}

std::strong_ordering DiffPoly::compare(const DiffPoly& a, const DiffPoly& b) {
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  for (; i != a.entries_.end() && j != b.entries_.end(); ++i, ++j) {
    if (auto c = Term::compare(i->first, j->first); c != 0) return c;
    if (i->second != j->second)
      return i->second < j->second ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  }
  return a.entries_.size() <=> b.entries_.size();
}

std::string DiffPoly::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : entries_) {
    bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = negative ? Rational(-c) : c;
    if (t.is_constant())
      os << mag.str();
    else if (mag != 1)
      os << mag.str() << '*' << t.str();
    else
      os << t.str();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffPoly& p) {
  return os << p.str();
}

std::string format_poly(const DiffPoly& p) { return p.str(); }

}  // namespace diffalg
