#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cattrace/cyclotomic.hpp"
#include "cattrace/group.hpp"

namespace cattrace {

struct CocycleViolation {
  int g, h, k;  // triple where c(g,h)c(gh,k) != c(h,k)c(g,hk)
};

// mu_m-valued 2-cocycle stored additively: c(g,h) = zeta_m^{exps[g][h]}.
// The multiplicative condition c(g,h)c(gh,k) = c(h,k)c(g,hk) becomes
// exps[g][h] + exps[gh][k] = exps[h][k] + exps[g][hk] (mod m).
struct Cocycle {
  GroupPtr group;
  int modulus = 1;
  std::vector<std::vector<int>> exps;

  Cocycle() = default;
  Cocycle(GroupPtr g, int m, std::vector<std::vector<int>> e);

  static Cocycle zero(GroupPtr g, int m);

  int at(int g, int h) const { return exps[g][h]; }
  CycScalar value(int g, int h) const { return CycScalar::root_of_unity(modulus, at(g, h)); }

  Cocycle opposite() const;  // (G^op, c^op) with c^op(g,h) = c(h,g)
};

std::vector<CocycleViolation> validate(const Cocycle& c);

// delta b with b: G -> Z/m, as a (always valid) cocycle.
Cocycle coboundary(const GroupPtr& group, int modulus, const std::vector<int>& b);

// Cohomologous cocycle with first row and column zero.
Cocycle normalize(const Cocycle& c);

struct RegularityClassReport {
  int representative = 0;
  bool is_regular = true;
  std::optional<std::pair<int, int>> witness;  // (g, h) with c(g,h) != c(h,g), h in C_g
};

struct RegularityReport {
  std::vector<RegularityClassReport> classes;
  int regular_count = 0;
};

RegularityReport regular_classes(const Cocycle& c);

// zeta_m^{exps[h][g] - exps[g][h]}; requires gh = hg.
CycScalar two_character_closed_form(const Cocycle& c, int g, int h);

// Solution space of the additive cocycle condition over F_m, m prime.
class CocycleEnumerator {
 public:
  CocycleEnumerator(GroupPtr group, int modulus, int order_cap = 8);

  int dimension() const { return (int)basis_.size(); }
  // Number of cocycles m^dim; throws if it exceeds 2^20.
  uint64_t count() const;
  Cocycle at(uint64_t index) const;  // digits of index base m, little-endian over the basis

  const std::vector<std::vector<uint32_t>>& basis() const { return basis_; }

 private:
  GroupPtr group_;
  int modulus_;
  std::vector<std::vector<uint32_t>> basis_;  // each of length |G|^2
};

struct CohomologyCount {
  int dim_z2 = 0;
  int dim_b2 = 0;
  uint64_t class_count = 0;  // m^(dim_z2 - dim_b2)
};

CohomologyCount cohomology_class_count(const GroupPtr& group, int modulus, int order_cap = 8);

}  // namespace cattrace
