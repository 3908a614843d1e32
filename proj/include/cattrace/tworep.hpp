#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cattrace/algebra.hpp"
#include "cattrace/cocycle.hpp"
#include "cattrace/group.hpp"
#include "cattrace/twomatrix.hpp"

namespace cattrace {

// 2-representation of a finite group on Vect^m in permutation-plus-scalar
// normal form: each functor rho(g) is the permutation matrix of pi_g with
// one-dimensional entries, the composition isomorphism phi_{g,h} has the
// nonzero component lambda[g][h][j] at source column j, and phi_1 has
// components unit_lambda[j].
struct TwoRep {
  GroupPtr group;
  int m = 1;
  int conductor = 1;
  std::vector<std::vector<int>> perm;                        // [g][j] = pi_g(j)
  std::vector<std::vector<std::vector<CycScalar>>> lambda;   // [g][h][j]
  std::vector<CycScalar> unit_lambda;                        // [j]

  int pi(int g, int j) const { return perm[g][j]; }
  const CycScalar& lam(int g, int h, int j) const { return lambda[g][h][j]; }

  // Fixed points of pi_g, the basis of the trace space X(g).
  std::vector<int> trace_basis(int g) const;
  VectMatrix functor_of(int g) const { return VectMatrix::permutation(perm[g]); }

  TwoRep promoted(int conductor) const;
};

struct TwoRepViolation {
  enum Kind { kPermutation, kPentagon, kUnit, kZeroScalar } kind;
  int g = -1, h = -1, k = -1, j = -1;
  std::string describe() const;
};

std::vector<TwoRepViolation> validate_two_rep(const TwoRep& rep);

TwoRep from_cocycle(const Cocycle& c);
// pi_g from the permutation action; lambda from the optional cocycle
// (constant in j), otherwise identically 1.
TwoRep from_group_action_on_set(const GroupPtr& g, const std::vector<std::vector<int>>& action,
                                const std::optional<Cocycle>& twist = std::nullopt);

// phi_{g,h} as a TwoNat rho(g) rho(h) => rho(gh); phi_1: rho(1) => Id.
TwoNat phi_nat(const TwoRep& rep, int g, int h);
TwoNat unit_nat(const TwoRep& rep);

// The conjugation isomorphism psi_s: X(g) -> X(s g s^{-1}) computed as the
// literal composite: unit of the adjunction rho(s^{-1}) -| rho(s), then
// rho(s) xi rho(s^{-1}), then the double composition isomorphism. Rows and
// columns are indexed by the ascending fixed-point bases.
CycMatrix psi(const TwoRep& rep, int s, int g);

// Exact trace of psi_h on X(g); requires gh = hg.
CycScalar two_character(const TwoRep& rep, int g, int h);

struct CatCharacter {
  std::vector<std::vector<int>> bases;       // per g, fixed points of pi_g
  std::vector<std::vector<CycMatrix>> psis;  // [s][g]
};

CatCharacter character_data(const TwoRep& rep);

TwoRep box_rep(const TwoRep& a, const TwoRep& b);
// Pullback along a group homomorphism given as an index map h -> hom[h].
TwoRep restrict_rep(const TwoRep& rep, const GroupPtr& h, const std::vector<int>& hom);
TwoRep diagonal_restriction(const TwoRep& box, const GroupPtr& g);  // along g -> (g,g)

struct TwistedAlgebraPresentation {
  std::vector<std::pair<int, int>> basis;  // (g, j) with pi_g(j) = j, g-major
  AlgebraPtr algebra;
  std::vector<CycMatrix> g_action;         // assembled from the psi matrices
};

TwistedAlgebraPresentation twisted_group_algebra(const TwoRep& rep);

// Fixed-point dimension of the G-action on R_rho.
int invariants_dim(const TwoRep& rep);
// (1/|G|) sum over commuting pairs of two_character; an integer for valid reps.
CycScalar character_sum(const TwoRep& rep);

int inner_product_dim(const TwoRep& a, const TwoRep& b);
// The 2-character side: (1/|G|) sum chi_a(g,h) chi_b(g,h).
CycScalar inner_product_character_sum(const TwoRep& a, const TwoRep& b);

}  // namespace cattrace
