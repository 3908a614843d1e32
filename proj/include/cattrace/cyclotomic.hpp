#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cattrace/rational.hpp"

namespace cattrace {

// Element of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, zeta_n, ..., zeta_n^{phi(n)-1} and kept fully reduced modulo the n-th
// cyclotomic polynomial, so equality of values is equality of coefficients.
class CycScalar {
 public:
  CycScalar() : conductor_(1), coeffs_(1, Rational(0)) {}
  explicit CycScalar(const Rational& q) : conductor_(1), coeffs_(1, q) {}
  CycScalar(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

  // coeffs must already have length phi(n); reduction is not re-run.
  static CycScalar from_reduced(int conductor, std::vector<Rational> coeffs);
  // Arbitrary-degree polynomial in zeta_n; reduced mod Phi_n.
  static CycScalar from_poly(int conductor, const std::vector<Rational>& poly);

  static CycScalar zero(int conductor);
  static CycScalar one(int conductor);
  // zeta_n^k (k taken mod n).
  static CycScalar root_of_unity(int conductor, long k);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // The value lies in Q iff every non-constant coefficient vanishes.
  bool is_rational() const;
  Rational rational_part() const;  // throws unless is_rational()

  bool operator==(const CycScalar& o) const {
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int conductor_;
  std::vector<Rational> coeffs_;
};

int euler_phi(int n);
// Phi_n as an integer-coefficient polynomial (ascending, monic).
const std::vector<Rational>& cyclotomic_polynomial(int n);

// Strict-conductor arithmetic; callers promote via lcm first.
CycScalar cyc_add(const CycScalar& a, const CycScalar& b);
CycScalar cyc_sub(const CycScalar& a, const CycScalar& b);
CycScalar cyc_mul(const CycScalar& a, const CycScalar& b);
CycScalar cyc_neg(const CycScalar& a);
// Multiplicative inverse via extended gcd with Phi_n; throws on zero.
CycScalar cyc_inv(const CycScalar& a);
CycScalar cyc_scale(const CycScalar& a, const Rational& q);

// Same value viewed in Q(zeta_{n'}); requires conductor | n'.
CycScalar promote(const CycScalar& a, int target_conductor);
// Recognize the value inside the subfield Q(zeta_{n'}), n' | conductor.
std::optional<CycScalar> try_demote(const CycScalar& a, int target_conductor);
// Promote both arguments to the lcm of their conductors.
std::pair<CycScalar, CycScalar> align(const CycScalar& a, const CycScalar& b);

}  // namespace cattrace
