#include "cattrace/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cattrace {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Division with remainder; divisor need not be monic but must be nonzero.
void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
  strip(a);
  Poly bb = b;
  strip(bb);
  if (bb.empty()) throw std::invalid_argument("polynomial division by zero");
  quot.assign(a.size() > bb.size() ? a.size() - bb.size() + 1 : 1, Rational(0));
  while (a.size() >= bb.size() && !a.empty()) {
    Rational c = a.back() / bb.back();
    size_t shift = a.size() - bb.size();
    quot[shift] = c;
    for (size_t i = 0; i < bb.size(); ++i) a[shift + i] -= c * bb[i];
    strip(a);
  }
  strip(quot);
  rem = a;
}

Poly poly_mod(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

// Extended gcd in Q[x]: returns (g, s, t) with s*a + t*b = g.
void poly_xgcd(Poly a, Poly b, Poly& g, Poly& s, Poly& t) {
  Poly s0{Rational(1)}, s1, t0, t1{Rational(1)};
  strip(a);
  strip(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = b;
    b = r;
    Poly s2 = s0, t2 = t0;
    // s2 -= q*s1 ; t2 -= q*t1
    Poly qs = poly_mul(q, s1), qt = poly_mul(q, t1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    if (t2.size() < qt.size()) t2.resize(qt.size(), Rational(0));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    strip(s2);
    strip(t2);
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  g = a;
  s = s0;
  t = t0;
}

}  // namespace

int euler_phi(int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::function<const Poly&(int)> get = [&](int k) -> const Poly& {
    auto jt = cache.find(k);
    if (jt != cache.end()) return jt->second;
    Poly num(k + 1, Rational(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      Poly q, r;
      poly_divmod(num, get(d), q, r);
      if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
      num = q;
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(n);
}

CycScalar CycScalar::from_reduced(int conductor, std::vector<Rational> coeffs) {
  if (conductor <= 0) throw std::invalid_argument("conductor must be positive");
  if ((int)coeffs.size() != euler_phi(conductor))
    throw std::invalid_argument("coefficient count must equal phi(conductor)");
  CycScalar s;
  s.conductor_ = conductor;
  s.coeffs_ = std::move(coeffs);
  return s;
}

CycScalar CycScalar::from_poly(int conductor, const std::vector<Rational>& poly) {
  if (conductor <= 0) throw std::invalid_argument("conductor must be positive");
  Poly r = poly_mod(poly, cyclotomic_polynomial(conductor));
  r.resize(euler_phi(conductor), Rational(0));
  return from_reduced(conductor, std::move(r));
}

CycScalar CycScalar::zero(int conductor) {
  return from_reduced(conductor, std::vector<Rational>(euler_phi(conductor), Rational(0)));
}

CycScalar CycScalar::one(int conductor) {
  std::vector<Rational> c(euler_phi(conductor), Rational(0));
  c[0] = 1;
  return from_reduced(conductor, std::move(c));
}

CycScalar CycScalar::root_of_unity(int conductor, long k) {
  k %= conductor;
  if (k < 0) k += conductor;
  Poly p(k + 1, Rational(0));
  p[k] = 1;
  return from_poly(conductor, p);
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycScalar::rational_part() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + to_string());
  return coeffs_[0];
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i > 0) os << "*z" << conductor_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

namespace {
void require_same_conductor(const CycScalar& a, const CycScalar& b) {
  if (a.conductor() != b.conductor())
    throw std::invalid_argument("conductor mismatch: " + std::to_string(a.conductor()) +
                                " vs " + std::to_string(b.conductor()));
}
}  // namespace

CycScalar cyc_add(const CycScalar& a, const CycScalar& b) {
  require_same_conductor(a, b);
  std::vector<Rational> c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return CycScalar::from_reduced(a.conductor(), std::move(c));
}

CycScalar cyc_sub(const CycScalar& a, const CycScalar& b) {
  require_same_conductor(a, b);
  std::vector<Rational> c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return CycScalar::from_reduced(a.conductor(), std::move(c));
}

CycScalar cyc_neg(const CycScalar& a) {
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x = -x;
  return CycScalar::from_reduced(a.conductor(), std::move(c));
}

CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) {
  require_same_conductor(a, b);
  return CycScalar::from_poly(a.conductor(), poly_mul(a.coeffs(), b.coeffs()));
}

CycScalar cyc_scale(const CycScalar& a, const Rational& q) {
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x *= q;
  return CycScalar::from_reduced(a.conductor(), std::move(c));
}

CycScalar cyc_inv(const CycScalar& a) {
  if (a.is_zero()) throw std::domain_error("division by zero in Q(zeta)");
  Poly g, s, t;
  poly_xgcd(a.coeffs(), cyclotomic_polynomial(a.conductor()), g, s, t);
  if (g.size() != 1) throw std::logic_error("nontrivial gcd with cyclotomic polynomial");
  // s*a = g mod Phi_n, so a^{-1} = s/g.
  for (auto& x : s) x /= g[0];
  return CycScalar::from_poly(a.conductor(), s);
}

CycScalar promote(const CycScalar& a, int target_conductor) {
  int n = a.conductor();
  if (target_conductor % n != 0)
    throw std::invalid_argument("promote: target conductor not a multiple of source");
  if (target_conductor == n) return a;
  int step = target_conductor / n;
  Poly p((a.coeffs().size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) p[i * step] = a.coeffs()[i];
  return CycScalar::from_poly(target_conductor, p);
}

std::optional<CycScalar> try_demote(const CycScalar& a, int target_conductor) {
  int n = a.conductor();
  if (n % target_conductor != 0)
    throw std::invalid_argument("try_demote: target conductor must divide source");
  if (n == target_conductor) return a;
  int dn = euler_phi(n), dm = euler_phi(target_conductor);
  // Columns: each subfield basis monomial promoted into Q(zeta_n) coordinates.
  std::vector<std::vector<Rational>> cols;
  for (int j = 0; j < dm; ++j) {
    std::vector<Rational> e(dm, Rational(0));
    e[j] = 1;
    cols.push_back(promote(CycScalar::from_reduced(target_conductor, e), n).coeffs());
  }
  // Solve cols * x = a.coeffs() by elimination on the augmented system.
  std::vector<std::vector<Rational>> m(dn, std::vector<Rational>(dm + 1, Rational(0)));
  for (int i = 0; i < dn; ++i) {
    for (int j = 0; j < dm; ++j) m[i][j] = cols[j][i];
    m[i][dm] = a.coeffs()[i];
  }
  int row = 0;
  std::vector<int> pivot_col(dn, -1);
  for (int col = 0; col < dm && row < dn; ++col) {
    int pr = -1;
    for (int r = row; r < dn; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    Rational inv = 1 / m[row][col];
    for (int c = col; c <= dm; ++c) m[row][c] *= inv;
    for (int r = 0; r < dn; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int c = col; c <= dm; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int r = row; r < dn; ++r)
    if (m[r][dm] != 0) return std::nullopt;  // not in the subfield
  std::vector<Rational> x(dm, Rational(0));
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = m[r][dm];
  return CycScalar::from_reduced(target_conductor, std::move(x));
}

std::pair<CycScalar, CycScalar> align(const CycScalar& a, const CycScalar& b) {
  int l = std::lcm(a.conductor(), b.conductor());
  return {promote(a, l), promote(b, l)};
}

}  // namespace cattrace
