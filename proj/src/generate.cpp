#include "cattrace/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cattrace {

std::vector<std::vector<int>> coset_action(const GroupPtr& g, int t) {
  const auto& G = *g;
  int n = G.order();
  // subgroup <t>
  std::vector<int> sub{G.identity()};
  int x = t;
  while (x != G.identity()) {
    sub.push_back(x);
    x = G.op(x, t);
  }
  // cosets g<t>, indexed by minimal element
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    int idx = (int)reps.size();
    reps.push_back(a);
    for (int s : sub) coset_of[G.op(a, s)] = idx;
  }
  int m = (int)reps.size();
  std::vector<std::vector<int>> act(n, std::vector<int>(m));
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < m; ++j) act[a][j] = coset_of[G.op(a, reps[j])];
  return act;
}

TwoRep random_two_rep(const GroupPtr& g, std::mt19937_64& rng, int max_m,
                      bool allow_cocycle_twist) {
  const auto& G = *g;
  int n = G.order();
  // pick a coset action of degree <= max_m (the trivial action always works)
  std::vector<std::vector<std::vector<int>>> candidates;
  for (int t = 0; t < n; ++t) {
    auto act = coset_action(g, t);
    if ((int)act[0].size() <= max_m) candidates.push_back(std::move(act));
  }
  if (candidates.empty()) candidates.push_back(std::vector<std::vector<int>>(n, {0}));
  auto action = candidates[rng() % candidates.size()];
  int m = (int)action[0].size();

  // scalar decoration: beta in mu_k, plus an optional mu_p cocycle pullback
  int k = 1 << (rng() % 3);              // 1, 2 or 4
  if (rng() % 3 == 0) k = 3;
  int p = (rng() % 2 == 0) ? 2 : 3;
  bool twist = allow_cocycle_twist && (rng() % 2 == 0);
  int conductor = twist ? std::lcm(k, p) : k;

  std::vector<std::vector<CycScalar>> beta(n, std::vector<CycScalar>(m));
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < m; ++j)
      beta[a][j] = CycScalar::root_of_unity(conductor, (long)(rng() % k) * (conductor / k));

  std::vector<std::vector<int>> exps(n, std::vector<int>(n, 0));
  if (twist) {
    CocycleEnumerator en(g, p);
    Cocycle c = en.at(rng() % en.count());
    exps = c.exps;
  }

  TwoRep rep;
  rep.group = g;
  rep.m = m;
  rep.conductor = conductor;
  rep.perm = action;
  rep.lambda.assign(n, std::vector<std::vector<CycScalar>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& cell = rep.lambda[a][b];
      cell.reserve(m);
      int ab = G.op(a, b);
      for (int j = 0; j < m; ++j) {
        CycScalar v = cyc_mul(beta[a][action[b][j]], beta[b][j]);
        v = cyc_mul(v, cyc_inv(beta[ab][j]));
        if (twist)
          v = cyc_mul(v, CycScalar::root_of_unity(conductor, (long)exps[a][b] * (conductor / p)));
        cell.push_back(v);
      }
    }
  rep.unit_lambda = rep.lambda[G.identity()][G.identity()];
  return rep;
}

std::vector<TwoRep> mixed_rep_corpus(uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<GroupPtr> groups = {
      cyclic(2), cyclic(3), cyclic(4),
      direct_product(cyclic(2), cyclic(2)),
      symmetric(3), dihedral(4), quaternion8(), cyclic(8),
  };
  std::vector<TwoRep> out;
  // a few canonical corners first: cocycle reps and plain actions
  auto v4 = direct_product(cyclic(2), cyclic(2));
  std::vector<std::vector<int>> e(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) e[g][h] = (g % 2) * (h / 2);
  out.push_back(from_cocycle(Cocycle(v4, 2, e)));
  out.push_back(from_cocycle(Cocycle::zero(cyclic(4), 2)));
  out.push_back(from_group_action_on_set(symmetric(3), coset_action(symmetric(3), 1)));
  while ((int)out.size() < count) {
    const auto& g = groups[rng() % groups.size()];
    out.push_back(random_two_rep(g, rng));
  }
  return out;
}

StructAlgebra dual_numbers(int conductor) {
  std::vector<CycScalar> sc(8, CycScalar::zero(conductor));
  auto at = [&](int i, int j, int k) -> CycScalar& { return sc[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = CycScalar::one(conductor);
  at(0, 1, 1) = CycScalar::one(conductor);
  at(1, 0, 1) = CycScalar::one(conductor);
  std::vector<CycScalar> unit{CycScalar::one(conductor), CycScalar::zero(conductor)};
  return StructAlgebra(2, conductor, std::move(sc), std::move(unit));
}

namespace {
NamedAction make_action(std::string name, StructAlgebra a, const GroupPtr& g,
                        std::vector<CycMatrix> autos) {
  NamedAction n;
  n.name = std::move(name);
  n.algebra = std::make_shared<const StructAlgebra>(std::move(a));
  n.action.group = g;
  n.action.algebra = n.algebra;
  n.action.autos = std::move(autos);
  auto errs = n.action.validate();
  if (!errs.empty()) throw std::logic_error("bad named action: " + errs.front());
  return n;
}
}  // namespace

NamedAction sign_action_on_group_algebra_z2() {
  auto z2 = cyclic(2);
  StructAlgebra a = group_algebra(z2, 1);
  CycMatrix sign(2, 2, 1);
  sign.set(0, 0, CycScalar(1));
  sign.set(1, 1, CycScalar(-1));
  return make_action("k[Z2] with sign action", std::move(a), z2,
                     {CycMatrix::identity(2, 1), sign});
}

NamedAction swap_action_on_kxk() {
  auto z2 = cyclic(2);
  StructAlgebra a = diagonal_algebra(2, 1);
  CycMatrix swap(2, 2, 1);
  swap.set(0, 1, CycScalar(1));
  swap.set(1, 0, CycScalar(1));
  return make_action("k x k with swap action", std::move(a), z2,
                     {CycMatrix::identity(2, 1), swap});
}

NamedAction inner_action_on_m2() {
  auto z2 = cyclic(2);
  StructAlgebra a = matrix_algebra(2, 1);
  // conjugation by diag(1,-1): E_ab -> (-1)^{a+b} E_ab
  CycMatrix conj(4, 4, 1);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      conj.set(x * 2 + y, x * 2 + y, CycScalar((x + y) % 2 == 0 ? 1 : -1));
  return make_action("M2(k) with inner Z2 action", std::move(a), z2,
                     {CycMatrix::identity(4, 1), conj});
}

NamedAction inversion_action_on_kz3() {
  auto z2 = cyclic(2);
  StructAlgebra a = group_algebra(cyclic(3), 1);
  CycMatrix inv(3, 3, 1);
  inv.set(0, 0, CycScalar(1));
  inv.set(1, 2, CycScalar(1));
  inv.set(2, 1, CycScalar(1));
  return make_action("k[Z3] with inversion action", std::move(a), z2,
                     {CycMatrix::identity(3, 1), inv});
}

std::mt19937_64 seeded_rng(uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace cattrace
