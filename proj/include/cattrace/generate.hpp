#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cattrace/tworep.hpp"

namespace cattrace {

// Left-translation action on the cosets of the cyclic subgroup generated
// by t; cosets are indexed in order of their minimal element.
std::vector<std::vector<int>> coset_action(const GroupPtr& g, int t);

// A pentagon-valid representation with permutation part from a coset
// action and scalar part beta_g(pi_h(j)) beta_h(j) beta_{gh}(j)^{-1} times
// an optional pulled-back cocycle. Mixing permutation and cocycle data
// exercises every identity away from the two easy corners.
TwoRep random_two_rep(const GroupPtr& g, std::mt19937_64& rng, int max_m = 4,
                      bool allow_cocycle_twist = true);

// Deterministic corpus across the sweep groups; size >= count.
std::vector<TwoRep> mixed_rep_corpus(uint64_t seed, int count);

// k[x]/(x^2): basis 1, x with x^2 = 0.
StructAlgebra dual_numbers(int conductor = 1);

// Named algebra actions used by the crossed-product and orbifold checks.
struct NamedAction {
  std::string name;
  AlgebraPtr algebra;
  GroupAction action;
};

NamedAction sign_action_on_group_algebra_z2();  // k[Z2], x -> -x
NamedAction swap_action_on_kxk();               // k x k, factors swapped
NamedAction inner_action_on_m2();               // M2(k), conjugation by diag(1,-1)
NamedAction inversion_action_on_kz3();          // k[Z3], g -> g^{-1}

std::mt19937_64 seeded_rng(uint64_t seed);

}  // namespace cattrace
