#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace cattrace {

// Exact rational scalar. GMP keeps the canonical form (gcd-reduced,
// positive denominator) as long as values are built through the class
// operators; raw string input goes through rational_from_decimal below.
using Rational = mpq_class;

inline Rational rational_from_decimal(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0) throw std::invalid_argument("bad integer literal: " + num);
  if (d.set_str(den, 10) != 0) throw std::invalid_argument("bad integer literal: " + den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// ("num","den") with a positive decimal denominator.
inline std::pair<std::string, std::string> rational_to_decimal(const Rational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Throws unless q is an integer that fits long.
inline long to_long_checked(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("expected an integer, got " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw std::domain_error("integer out of long range");
  return q.get_num().get_si();
}

}  // namespace cattrace
