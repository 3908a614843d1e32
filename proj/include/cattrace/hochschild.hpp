#pragma once

#include <vector>

#include "cattrace/algebra.hpp"

namespace cattrace {

// Degrees 0..max_degree of the (co)bar complex C^n = Hom(A^{(x)n}, M) with
// the standard Hochschild differential. differentials[n] maps C^n -> C^{n+1};
// one extra differential past max_degree is kept so HH^{max_degree} is exact.
struct CochainComplexSlice {
  int max_degree = 0;
  std::vector<int> dims;               // 0..max_degree+1
  std::vector<CycMatrix> differentials;  // delta^0 .. delta^{max_degree}

  // delta^{n+1} delta^n = 0 for every represented n.
  bool differentials_square_to_zero() const;
};

CochainComplexSlice build_bar_complex(const AlgebraPtr& a, const Bimodule& m, int max_degree,
                                      bool normalized = false, int cap = 20000);

struct HHReport {
  std::vector<int> dims;  // HH^0 .. HH^max_degree
};

HHReport hochschild_dims(const AlgebraPtr& a, const Bimodule& m, int max_degree,
                         bool normalized = false, int cap = 20000);

struct KunnethHHReport {
  std::vector<int> lhs;  // sum over p+q = n of HH^p(A) HH^q(B)
  std::vector<int> rhs;  // HH^n(A (x) B)
  bool equal = false;
};

KunnethHHReport kunneth_hh(const AlgebraPtr& a, const AlgebraPtr& b, int max_degree,
                           int cap = 20000);

struct OrbifoldHHReport {
  std::vector<int> crossed;     // HH^n(A x| G, A x| G)
  std::vector<int> invariants;  // dim of H^n of the G-invariant subcomplex of sum_g C(A, Ag)
  bool action_commutes_with_differential = false;
  bool equal = false;
};

OrbifoldHHReport orbifold_hh_check(const AlgebraPtr& a, const GroupAction& action, int max_degree,
                                   int cap = 20000);

}  // namespace cattrace
