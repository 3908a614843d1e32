#include "cattrace/cocycle.hpp"

#include <stdexcept>

#include "cattrace/modp.hpp"

namespace cattrace {

namespace {
bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}
}  // namespace

Cocycle::Cocycle(GroupPtr g, int m, std::vector<std::vector<int>> e)
    : group(std::move(g)), modulus(m), exps(std::move(e)) {
  if (modulus <= 0) throw std::invalid_argument("cocycle modulus must be positive");
  int n = group->order();
  if ((int)exps.size() != n) throw std::invalid_argument("cocycle table shape mismatch");
  for (auto& row : exps) {
    if ((int)row.size() != n) throw std::invalid_argument("cocycle table shape mismatch");
    for (auto& v : row) v = ((v % modulus) + modulus) % modulus;
  }
}

Cocycle Cocycle::zero(GroupPtr g, int m) {
  int n = g->order();
  return Cocycle(std::move(g), m, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
}

Cocycle Cocycle::opposite() const {
  auto op_group = std::make_shared<const FiniteGroup>(group->opposite());
  int n = group->order();
  std::vector<std::vector<int>> e(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) e[g][h] = exps[h][g];
  return Cocycle(op_group, modulus, std::move(e));
}

std::vector<CocycleViolation> validate(const Cocycle& c) {
  std::vector<CocycleViolation> violations;
  const auto& G = *c.group;
  int n = G.order(), m = c.modulus;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        int lhs = c.exps[g][h] + c.exps[G.op(g, h)][k];
        int rhs = c.exps[h][k] + c.exps[g][G.op(h, k)];
        if ((lhs - rhs) % m != 0) violations.push_back({g, h, k});
      }
  return violations;
}

Cocycle coboundary(const GroupPtr& group, int modulus, const std::vector<int>& b) {
  int n = group->order();
  if ((int)b.size() != n) throw std::invalid_argument("coboundary: b must be total on G");
  std::vector<std::vector<int>> e(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) e[g][h] = b[g] + b[h] - b[group->op(g, h)];
  return Cocycle(group, modulus, std::move(e));
}

Cocycle normalize(const Cocycle& c) {
  // For a valid cocycle the first row/column is constant (= exps[1][1]),
  // so subtracting delta(b) with b(g) = exps[1][g] zeroes both.
  int n = c.group->order();
  int id = c.group->identity();
  std::vector<int> b(n);
  for (int g = 0; g < n; ++g) b[g] = c.exps[id][g];
  Cocycle delta = coboundary(c.group, c.modulus, b);
  std::vector<std::vector<int>> e(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) e[g][h] = c.exps[g][h] - delta.exps[g][h];
  return Cocycle(c.group, c.modulus, std::move(e));
}

RegularityReport regular_classes(const Cocycle& c) {
  const auto& G = *c.group;
  const auto& conj = G.conjugacy();
  RegularityReport report;
  for (const auto& cls : conj.classes) {
    RegularityClassReport r;
    r.representative = cls.front();
    int g = r.representative;
    for (int h : conj.centralizers[g]) {
      if ((c.exps[g][h] - c.exps[h][g]) % c.modulus != 0) {
        r.is_regular = false;
        r.witness = {g, h};
        break;
      }
    }
    if (r.is_regular) ++report.regular_count;
    report.classes.push_back(r);
  }
  return report;
}

CycScalar two_character_closed_form(const Cocycle& c, int g, int h) {
  const auto& G = *c.group;
  if (G.op(g, h) != G.op(h, g))
    throw std::invalid_argument("two_character_closed_form: elements do not commute");
  return CycScalar::root_of_unity(c.modulus, c.exps[h][g] - c.exps[g][h]);
}

CocycleEnumerator::CocycleEnumerator(GroupPtr group, int modulus, int order_cap)
    : group_(std::move(group)), modulus_(modulus) {
  if (!is_prime(modulus_))
    throw std::invalid_argument("cocycle enumeration needs a prime modulus");
  int n = group_->order();
  if (n > order_cap)
    throw std::invalid_argument("cocycle enumeration size cap exceeded");
  // Unknowns x[g][h] indexed g*n + h; one linear relation per triple.
  ModPMatrix m(n * n * n, n * n, (uint32_t)modulus_);
  int row = 0;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k, ++row) {
        m.add_at(row, g * n + h, 1);
        m.add_at(row, group_->op(g, h) * n + k, 1);
        m.add_at(row, h * n + k, -1);
        m.add_at(row, g * n + group_->op(h, k), -1);
      }
  basis_ = m.kernel();
}

uint64_t CocycleEnumerator::count() const {
  uint64_t c = 1;
  for (int i = 0; i < dimension(); ++i) {
    c *= (uint64_t)modulus_;
    if (c > (1u << 20)) throw std::domain_error("cocycle space too large to enumerate");
  }
  return c;
}

Cocycle CocycleEnumerator::at(uint64_t index) const {
  int n = group_->order();
  std::vector<int> flat(n * n, 0);
  uint64_t rest = index;
  for (const auto& vec : basis_) {
    int digit = (int)(rest % modulus_);
    rest /= modulus_;
    if (digit != 0)
      for (int i = 0; i < n * n; ++i) flat[i] += digit * (int)vec[i];
  }
  if (rest != 0) throw std::out_of_range("cocycle index out of range");
  std::vector<std::vector<int>> e(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) e[g][h] = flat[g * n + h] % modulus_;
  return Cocycle(group_, modulus_, std::move(e));
}

CohomologyCount cohomology_class_count(const GroupPtr& group, int modulus, int order_cap) {
  CocycleEnumerator en(group, modulus, order_cap);
  int n = group->order();
  // Coboundary map F_m^G -> F_m^{G x G}: b |-> b(g) + b(h) - b(gh).
  ModPMatrix d(n * n, n, (uint32_t)modulus);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int row = g * n + h;
      d.add_at(row, g, 1);
      d.add_at(row, h, 1);
      d.add_at(row, group->op(g, h), -1);
    }
  CohomologyCount result;
  result.dim_z2 = en.dimension();
  result.dim_b2 = d.rank();
  result.class_count = 1;
  for (int i = 0; i < result.dim_z2 - result.dim_b2; ++i) result.class_count *= (uint64_t)modulus;
  return result;
}

}  // namespace cattrace
