#include "diffalg/rational.hpp"

namespace diffalg {

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

bool is_rational_square(const Rational& r) {
  if (r < 0) return false;
  return is_perfect_square(numerator(r)) && is_perfect_square(denominator(r));
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace diffalg
