#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "cattrace/generate.hpp"
#include "cattrace/tworep.hpp"

using namespace cattrace;

namespace {

Cocycle klein_nontrivial() {
  auto v4 = direct_product(cyclic(2), cyclic(2));
  std::vector<std::vector<int>> e(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) e[g][h] = (g % 2) * (h / 2);
  return Cocycle(v4, 2, std::move(e));
}

}  // namespace

TEST_CASE("validate_two_rep") {
  CHECK(validate_two_rep(from_cocycle(Cocycle::zero(cyclic(2), 2))).empty());

  // pentagon on the m = 1 Klein cocycle rep is exactly the cocycle identity
  TwoRep rep = from_cocycle(klein_nontrivial());
  CHECK(validate_two_rep(rep).empty());

  // perturbing one lambda breaks the pentagon with a witness triple
  TwoRep broken = rep.promoted(4);
  broken.lambda[1][2][0] = cyc_mul(broken.lambda[1][2][0], CycScalar::root_of_unity(4, 1));
  auto violations = validate_two_rep(broken);
  REQUIRE_FALSE(violations.empty());
  bool has_pentagon = false;
  for (const auto& v : violations) has_pentagon |= v.kind == TwoRepViolation::kPentagon;
  CHECK(has_pentagon);

  // invalid cocycle data cannot enter through from_cocycle
  auto z4 = cyclic(4);
  std::vector<std::vector<int>> bad(4, std::vector<int>(4, 0));
  bad[1][1] = 1;
  CHECK_THROWS_AS(from_cocycle(Cocycle(z4, 2, bad)), std::invalid_argument);
}

TEST_CASE("generated corpus is valid") {
  auto corpus = mixed_rep_corpus(12345, 20);
  for (const auto& rep : corpus) CHECK(validate_two_rep(rep).empty());
}

TEST_CASE("from_group_action_on_set") {
  auto s3 = symmetric(3);
  // left translation on itself: no fixed points away from the identity
  auto translation = coset_action(s3, s3->identity());  // trivial subgroup: regular action
  TwoRep reg = from_group_action_on_set(s3, translation);
  CHECK(reg.m == 6);
  for (int g = 0; g < 6; ++g)
    CHECK(reg.trace_basis(g).size() == (g == 0 ? 6 : 0));

  // trivial action, m = 1
  TwoRep triv = from_group_action_on_set(s3, std::vector<std::vector<int>>(6, {0}));
  CHECK(validate_two_rep(triv).empty());
  CHECK(triv.trace_basis(3).size() == 1);

  // S3 on 3 points: chi(g, 1) = number of fixed points
  auto points = coset_action(s3, 1);  // index-3 subgroup generated by a transposition
  REQUIRE(points[0].size() == 3);
  TwoRep nat = from_group_action_on_set(s3, points);
  for (int g = 0; g < 6; ++g) {
    int fixed = 0;
    for (int j = 0; j < 3; ++j)
      if (points[g][j] == j) ++fixed;
    CHECK(two_character(nat, g, 0) == CycScalar(fixed));
  }

  // non-action input
  std::vector<std::vector<int>> not_action(6, {0, 1, 2});
  not_action[1] = {1, 2, 0};
  not_action[2] = {0, 1, 2};
  CHECK_THROWS_AS(from_group_action_on_set(s3, not_action), std::invalid_argument);
}

TEST_CASE("psi_1 is the identity") {
  auto corpus = mixed_rep_corpus(777, 12);
  for (const auto& rep : corpus) {
    const auto& G = *rep.group;
    for (int g = 0; g < G.order(); ++g) {
      auto fix = rep.trace_basis(g);
      CHECK(psi(rep, G.identity(), g) ==
            CycMatrix::identity((int)fix.size(), rep.conductor));
    }
  }
}

TEST_CASE("m = 1 diagram chi equals the closed form") {
  // normalized Klein cocycle
  TwoRep rep = from_cocycle(klein_nontrivial());
  Cocycle c = klein_nontrivial();
  for (auto [g, h] : rep.group->commuting_pairs())
    CHECK(two_character(rep, g, h) == two_character_closed_form(c, g, h));

  // unnormalized cocycles across several groups
  for (auto group : {cyclic(4), dihedral(4), quaternion8()}) {
    CocycleEnumerator en(group, 2);
    for (uint64_t i : {en.count() / 5, en.count() / 2, en.count() - 2}) {
      Cocycle cc = en.at(i);
      TwoRep r = from_cocycle(cc);
      for (auto [g, h] : group->commuting_pairs())
        CHECK(two_character(r, g, h) == two_character_closed_form(cc, g, h));
    }
  }
}

TEST_CASE("psi composes: psi_s psi_t = psi_{st}, exhaustive") {
  std::mt19937_64 rng(99);
  std::vector<TwoRep> reps;
  reps.push_back(random_two_rep(dihedral(4), rng));
  reps.push_back(random_two_rep(symmetric(3), rng));
  reps.push_back(from_cocycle(klein_nontrivial()));
  for (const auto& rep : reps) {
    const auto& G = *rep.group;
    for (int s = 0; s < G.order(); ++s)
      for (int t = 0; t < G.order(); ++t)
        for (int g = 0; g < G.order(); ++g) {
          int tgt = G.conjugate(t, g);
          CycMatrix lhs = mat_mul(psi(rep, s, tgt), psi(rep, t, g));
          CycMatrix rhs = psi(rep, G.op(s, t), g);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("the two pentagon routes for the double composition agree") {
  std::mt19937_64 rng(100);
  for (auto group : {symmetric(3), quaternion8()}) {
    TwoRep rep = random_two_rep(group, rng);
    const auto& G = *rep.group;
    for (int s = 0; s < G.order(); ++s)
      for (int g = 0; g < G.order(); ++g) {
        int si = G.inverse(s);
        TwoNat route_a = vcompose(
            phi_nat(rep, G.op(s, g), si),
            hcompose(phi_nat(rep, s, g), TwoNat::identity(rep.functor_of(si), rep.conductor)));
        TwoNat route_b = vcompose(
            phi_nat(rep, s, G.op(g, si)),
            hcompose(TwoNat::identity(rep.functor_of(s), rep.conductor), phi_nat(rep, g, si)));
        CHECK(route_a == route_b);
      }
  }
}

TEST_CASE("chi is a 2-class function") {
  auto corpus = mixed_rep_corpus(31337, 10);
  for (const auto& rep : corpus) {
    const auto& G = *rep.group;
    for (auto [g, h] : G.commuting_pairs())
      for (int s = 0; s < G.order(); ++s) {
        int si = G.inverse(s);
        int gg = G.op(G.op(si, g), s), hh = G.op(G.op(si, h), s);
        CHECK(two_character(rep, gg, hh) == two_character(rep, g, h));
      }
  }
}

TEST_CASE("chi(g,1) counts fixed points") {
  auto corpus = mixed_rep_corpus(2024, 10);
  for (const auto& rep : corpus) {
    const auto& G = *rep.group;
    for (int g = 0; g < G.order(); ++g)
      CHECK(two_character(rep, g, G.identity()) ==
            promote(CycScalar((long)rep.trace_basis(g).size()), rep.conductor));
  }
}

TEST_CASE("box_rep") {
  std::mt19937_64 rng(555);
  TwoRep a = random_two_rep(symmetric(3), rng);
  TwoRep triv = from_group_action_on_set(cyclic(1), {{0}});
  // box with the trivial one-dimensional rep is a reindexed original
  TwoRep boxed = box_rep(a, triv);
  CHECK(boxed.m == a.m);
  const auto& G = *a.group;
  for (int g = 0; g < G.order(); ++g)
    CHECK(boxed.trace_basis(g) == a.trace_basis(g));
  CHECK(validate_two_rep(boxed).empty());

  // chi multiplicativity and fixed-point dimension product
  TwoRep b = random_two_rep(cyclic(4), rng);
  TwoRep ab = box_rep(a, b);
  CHECK(validate_two_rep(ab).empty());
  const auto& H = *b.group;
  int nb = H.order();
  for (auto [g1, h1] : G.commuting_pairs())
    for (auto [g2, h2] : H.commuting_pairs()) {
      int g = g1 * nb + g2, h = h1 * nb + h2;
      CycScalar lhs = two_character(ab, g, h);
      CycScalar rhs = cyc_mul(promote(two_character(a, g1, h1), ab.conductor),
                              promote(two_character(b, g2, h2), ab.conductor));
      CHECK(lhs == rhs);
    }
  for (int g1 = 0; g1 < G.order(); ++g1)
    for (int g2 = 0; g2 < nb; ++g2)
      CHECK(ab.trace_basis(g1 * nb + g2).size() ==
            a.trace_basis(g1).size() * b.trace_basis(g2).size());
}

TEST_CASE("twisted group algebra") {
  // m = 1: recovers b_g b_h = c(g,h) b_{gh}
  Cocycle c = klein_nontrivial();
  TwoRep rep = from_cocycle(c);
  auto p = twisted_group_algebra(rep);
  REQUIRE(p.algebra->dim() == 4);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      int gh = rep.group->op(g, h);
      for (int k = 0; k < 4; ++k) {
        CycScalar expect = (k == gh) ? c.value(g, h) : CycScalar::zero(2);
        CHECK(p.algebra->sc(g, h, k) == expect);
      }
    }
  CHECK(p.algebra->validate().empty());

  // left-translation action: R congruent to functions on G
  auto s3 = symmetric(3);
  TwoRep reg = from_group_action_on_set(s3, coset_action(s3, 0));
  auto preg = twisted_group_algebra(reg);
  CHECK(preg.algebra->dim() == 6);  // only the identity contributes, all j
  for (const auto& [g, j] : preg.basis) CHECK(g == 0);
  CHECK(preg.algebra->validate().empty());
  // product structure of functions on G: e_i e_j = delta_ij e_i
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        CHECK(preg.algebra->sc(i, j, k) ==
              ((i == j && j == k) ? CycScalar::one(1) : CycScalar::zero(1)));

  // associativity of structure constants for mixed generated data
  auto corpus = mixed_rep_corpus(4242, 8);
  for (const auto& r : corpus) {
    auto pr = twisted_group_algebra(r);
    CHECK(pr.algebra->validate().empty());
    // the G-action is by algebra automorphisms fixing the unit
    const auto& G = *r.group;
    for (int s = 0; s < G.order(); ++s) {
      CHECK(apply_vec(pr.g_action[s], pr.algebra->unit()) == pr.algebra->unit());
      for (int u = 0; u < pr.algebra->dim(); ++u)
        for (int v = 0; v < pr.algebra->dim(); ++v) {
          std::vector<CycScalar> eu(pr.algebra->dim(), CycScalar::zero(r.conductor));
          std::vector<CycScalar> ev = eu;
          eu[u] = CycScalar::one(r.conductor);
          ev[v] = CycScalar::one(r.conductor);
          auto lhs = apply_vec(pr.g_action[s], pr.algebra->mul(eu, ev));
          auto rhs = pr.algebra->mul(apply_vec(pr.g_action[s], eu), apply_vec(pr.g_action[s], ev));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("invariants equal the character sum") {
  // trivial one-dimensional rep: both equal the class number
  for (auto group : {symmetric(3), dihedral(4), quaternion8()}) {
    TwoRep triv = from_group_action_on_set(
        group, std::vector<std::vector<int>>(group->order(), {0}));
    int classes = (int)group->conjugacy().classes.size();
    CHECK(invariants_dim(triv) == classes);
    CHECK(character_sum(triv) == CycScalar((long)classes));
  }

  // Klein nontrivial cocycle: both equal 1
  TwoRep nt = from_cocycle(klein_nontrivial());
  CHECK(invariants_dim(nt) == 1);
  CHECK(character_sum(nt) == promote(CycScalar(1), 2));

  // generated corpus, exact agreement
  auto corpus = mixed_rep_corpus(808, 15);
  for (const auto& rep : corpus) {
    CycScalar cs = character_sum(rep);
    REQUIRE(cs.is_rational());
    REQUIRE(is_integer(cs.rational_part()));
    CHECK(Rational((long)invariants_dim(rep)) == cs.rational_part());
  }
}

TEST_CASE("invariant elements are central in the twisted algebra") {
  auto corpus = mixed_rep_corpus(909, 10);
  for (const auto& rep : corpus) {
    auto p = twisted_group_algebra(rep);
    int dim = p.algebra->dim();
    std::vector<CycMatrix> rows;
    for (const auto& act : p.g_action)
      rows.push_back(mat_sub(act, CycMatrix::identity(dim, rep.conductor)));
    auto invariants = kernel_basis(vstack(rows));
    for (const auto& col : invariants) {
      std::vector<CycScalar> z;
      for (int i = 0; i < dim; ++i) z.push_back(col.at(i, 0));
      for (int b = 0; b < dim; ++b) {
        std::vector<CycScalar> eb(dim, CycScalar::zero(rep.conductor));
        eb[b] = CycScalar::one(rep.conductor);
        CHECK(p.algebra->mul(z, eb) == p.algebra->mul(eb, z));
      }
    }
  }
}

TEST_CASE("inner products") {
  auto v4 = direct_product(cyclic(2), cyclic(2));
  TwoRep triv = from_group_action_on_set(v4, std::vector<std::vector<int>>(4, {0}));
  CHECK(inner_product_dim(triv, triv) == 4);  // class count

  TwoRep nt = from_cocycle(klein_nontrivial());
  // chi values are +-1, so <rho_c, rho_c> = class count = 4
  CHECK(inner_product_dim(nt, nt) == 4);

  // <rho, trivial> = invariants_dim(rho)
  std::mt19937_64 rng(111);
  for (auto group : {cyclic(4), symmetric(3)}) {
    TwoRep rep = random_two_rep(group, rng);
    TwoRep t = from_group_action_on_set(group,
                                        std::vector<std::vector<int>>(group->order(), {0}));
    CHECK(inner_product_dim(rep, t) == invariants_dim(rep));
  }

  // the character-sum formula agrees with the invariants computation on
  // same-group pairs
  for (auto group : {direct_product(cyclic(2), cyclic(2)), symmetric(3), cyclic(4)}) {
    TwoRep a = random_two_rep(group, rng);
    TwoRep b = random_two_rep(group, rng);
    CycScalar cs = inner_product_character_sum(a, b);
    REQUIRE(cs.is_rational());
    REQUIRE(is_integer(cs.rational_part()));
    CHECK(Rational((long)inner_product_dim(a, b)) == cs.rational_part());
  }
  CHECK_THROWS_AS(inner_product_dim(triv, from_cocycle(Cocycle::zero(cyclic(2), 2))),
                  std::invalid_argument);
}

TEST_CASE("character data assembles bases and invertible psi matrices") {
  std::mt19937_64 rng(404);
  TwoRep rep = random_two_rep(dihedral(4), rng);
  CatCharacter data = character_data(rep);
  const auto& G = *rep.group;
  for (int g = 0; g < G.order(); ++g)
    CHECK(data.bases[g] == rep.trace_basis(g));
  for (int s = 0; s < G.order(); ++s)
    for (int g = 0; g < G.order(); ++g) {
      const CycMatrix& m = data.psis[s][g];
      CHECK(m.rows() == (int)rep.trace_basis(G.conjugate(s, g)).size());
      CHECK(m.cols() == (int)rep.trace_basis(g).size());
      if (m.rows() > 0) CHECK(mat_inverse(m).has_value());
    }
  CHECK(data.psis[G.identity()][1] ==
        CycMatrix::identity((int)rep.trace_basis(1).size(), rep.conductor));
}

TEST_CASE("pentagon-valid data never satisfies one unit triangle without the other") {
  // with the pentagon holding, both orientations are equivalent to
  // unit_lambda = lambda_{1,1}; a wrong unit_lambda must break both
  std::mt19937_64 rng(505);
  for (auto group : {cyclic(4), symmetric(3)}) {
    TwoRep rep = random_two_rep(group, rng);
    REQUIRE(validate_two_rep(rep).empty());
    TwoRep wrong = rep.promoted(std::lcm(rep.conductor, 4));
    for (auto& u : wrong.unit_lambda) u = cyc_mul(u, CycScalar::root_of_unity(wrong.conductor, wrong.conductor / 4));
    auto violations = validate_two_rep(wrong);
    bool first = false, second = false, pentagon = false;
    for (const auto& v : violations) {
      if (v.kind == TwoRepViolation::kUnit && v.k == -1) first = true;
      if (v.kind == TwoRepViolation::kUnit && v.k == -2) second = true;
      if (v.kind == TwoRepViolation::kPentagon) pentagon = true;
    }
    CHECK(first);
    CHECK(second);
    CHECK_FALSE(pentagon);
  }
}

TEST_CASE("m = 1 twisted algebra agrees with the cocycle-built algebra") {
  for (auto group : {direct_product(cyclic(2), cyclic(2)), dihedral(4)}) {
    CocycleEnumerator en(group, 2);
    for (uint64_t i : {(uint64_t)1, en.count() - 1}) {
      Cocycle c = en.at(i);
      auto via_rep = twisted_group_algebra(from_cocycle(c));
      StructAlgebra via_cocycle = twisted_group_algebra_from_cocycle(c);
      REQUIRE(via_rep.algebra->dim() == via_cocycle.dim());
      for (int a = 0; a < via_cocycle.dim(); ++a)
        for (int b = 0; b < via_cocycle.dim(); ++b)
          for (int k = 0; k < via_cocycle.dim(); ++k)
            CHECK(via_rep.algebra->sc(a, b, k) == via_cocycle.sc(a, b, k));
      CHECK(via_rep.algebra->unit() == via_cocycle.unit());
    }
  }
}
