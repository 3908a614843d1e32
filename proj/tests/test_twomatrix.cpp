#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cattrace/twomatrix.hpp"

using namespace cattrace;

namespace {

VectMatrix stairs() {  // dims [[1,1],[0,1]]
  VectMatrix f(2, 2);
  f.dims = {{1, 1}, {0, 1}};
  return f;
}

VectMatrix random_functor(std::mt19937_64& rng, int dst, int src, int max_entry) {
  VectMatrix f(dst, src);
  for (auto& row : f.dims)
    for (auto& d : row) d = (int)(rng() % (max_entry + 1));
  return f;
}

TwoNat random_nat(std::mt19937_64& rng, const VectMatrix& src, const VectMatrix& dst,
                  int conductor) {
  TwoNat n(src, dst, conductor);
  int deg = euler_phi(conductor);
  for (int i = 0; i < src.m_dst; ++i)
    for (int j = 0; j < src.m_src; ++j) {
      CycMatrix b(dst.dims[i][j], src.dims[i][j], conductor);
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
          std::vector<Rational> coeffs(deg);
          for (auto& x : coeffs) x = Rational((long)(rng() % 5) - 2);
          b.set(r, c, CycScalar::from_reduced(conductor, coeffs));
        }
      n.blocks[i][j] = std::move(b);
    }
  return n;
}

std::vector<int> random_perm(std::mt19937_64& rng, int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  for (int i = m - 1; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
  return p;
}

}  // namespace

TEST_CASE("compose dims") {
  VectMatrix f = stairs();
  CHECK(compose(VectMatrix::identity(2), f) == f);
  CHECK(compose(f, VectMatrix::identity(2)) == f);
  VectMatrix ff = compose(f, f);
  CHECK(ff.dims == std::vector<std::vector<int>>{{1, 2}, {0, 1}});
  CHECK_THROWS_AS(compose(f, VectMatrix(3, 3)), std::invalid_argument);

  // composite of permutation functors is the product permutation, m <= 3
  for (int m = 1; m <= 3; ++m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto& a : perms)
      for (const auto& b : perms) {
        std::vector<int> ab(m);
        for (int j = 0; j < m; ++j) ab[j] = a[b[j]];
        CHECK(compose(VectMatrix::permutation(a), VectMatrix::permutation(b)) ==
              VectMatrix::permutation(ab));
      }
  }
}

TEST_CASE("ttr reads the diagonal") {
  CHECK(ttr(VectMatrix::identity(5)).total_dim == 5);
  CHECK(ttr(stairs()).total_dim == 2);
  CHECK_THROWS_AS(ttr(VectMatrix(2, 3)), std::invalid_argument);

  // permutation functor: trace dimension = fixed points, exhaustive m <= 4
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
      int fixed = 0;
      for (int j = 0; j < m; ++j)
        if (p[j] == j) ++fixed;
      CHECK(ttr(VectMatrix::permutation(p)).total_dim == fixed);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("box") {
  CHECK(box(VectMatrix::identity(2), VectMatrix::identity(3)) == VectMatrix::identity(6));

  VectMatrix f = stairs();
  VectMatrix h(1, 1);
  h.dims = {{2}};
  CHECK(ttr(box(f, h)).total_dim == 4);
  CHECK(ttr(f).total_dim * ttr(h).total_dim == 4);

  // box of permutation functors = product permutation on pairs
  std::vector<int> a{1, 0}, b{0, 2, 1};
  VectMatrix ba = box(VectMatrix::permutation(a), VectMatrix::permutation(b));
  std::vector<int> pairs(6);
  for (int i = 0; i < 2; ++i)
    for (int p = 0; p < 3; ++p) pairs[i * 3 + p] = a[i] * 3 + b[p];
  CHECK(ba == VectMatrix::permutation(pairs));
}

TEST_CASE("vertical composition") {
  std::mt19937_64 rng(21);
  VectMatrix f = random_functor(rng, 2, 2, 2);
  VectMatrix g = random_functor(rng, 2, 2, 2);
  VectMatrix h = random_functor(rng, 2, 2, 2);
  VectMatrix k = random_functor(rng, 2, 2, 2);
  TwoNat a = random_nat(rng, f, g, 4);
  TwoNat b = random_nat(rng, g, h, 4);
  TwoNat c = random_nat(rng, h, k, 4);
  CHECK(vcompose(TwoNat::identity(g, 4), a) == a);
  CHECK(vcompose(a, TwoNat::identity(f, 4)) == a);
  CHECK(vcompose(c, vcompose(b, a)) == vcompose(vcompose(c, b), a));
}

TEST_CASE("horizontal composition: identities and butterfly") {
  std::mt19937_64 rng(22);
  // hcompose(id, id) = id
  VectMatrix f = random_functor(rng, 3, 2, 2);
  VectMatrix g = random_functor(rng, 2, 3, 2);
  CHECK(hcompose(TwoNat::identity(g, 1), TwoNat::identity(f, 1)) ==
        TwoNat::identity(compose(g, f), 1));

  // butterfly: (theta o id') . (id o eta) = hcompose(theta, eta) = (id' o eta) . (theta o id)
  for (int trial = 0; trial < 10; ++trial) {
    VectMatrix F = random_functor(rng, 2, 2, 2), Fp = random_functor(rng, 2, 2, 2);
    VectMatrix G = random_functor(rng, 2, 2, 2), Gp = random_functor(rng, 2, 2, 2);
    TwoNat eta = random_nat(rng, F, Fp, 4);    // on the inner functor
    TwoNat theta = random_nat(rng, G, Gp, 4);  // on the outer functor
    TwoNat both = hcompose(theta, eta);
    TwoNat left = vcompose(hcompose(theta, TwoNat::identity(Fp, 4)),
                           hcompose(TwoNat::identity(G, 4), eta));
    TwoNat right = vcompose(hcompose(TwoNat::identity(Gp, 4), eta),
                            hcompose(theta, TwoNat::identity(F, 4)));
    CHECK(both == left);
    CHECK(both == right);
  }

  // zero block annihilates composite blocks
  VectMatrix z(1, 1);
  z.dims = {{1}};
  TwoNat zero_nat(z, z, 1);  // the 1x1 zero block
  TwoNat idn = TwoNat::identity(z, 1);
  TwoNat composite = hcompose(zero_nat, idn);
  CHECK(composite.blocks[0][0].is_zero());
}

TEST_CASE("interchange law on random small instances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    VectMatrix F1 = random_functor(rng, 2, 2, 2), F2 = random_functor(rng, 2, 2, 2),
               F3 = random_functor(rng, 2, 2, 2);
    VectMatrix G1 = random_functor(rng, 2, 2, 2), G2 = random_functor(rng, 2, 2, 2),
               G3 = random_functor(rng, 2, 2, 2);
    TwoNat phi = random_nat(rng, F1, F2, 3), phip = random_nat(rng, F2, F3, 3);
    TwoNat psi = random_nat(rng, G1, G2, 3), psip = random_nat(rng, G2, G3, 3);
    TwoNat lhs = hcompose(vcompose(psip, psi), vcompose(phip, phi));
    TwoNat rhs = vcompose(hcompose(psip, phip), hcompose(psi, phi));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("trace cyclicity at dimension level") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + (int)(rng() % 3), n = 1 + (int)(rng() % 3);
    VectMatrix f = random_functor(rng, n, m, 3);
    VectMatrix g = random_functor(rng, m, n, 3);
    CHECK(ttr(compose(g, f)).total_dim == ttr(compose(f, g)).total_dim);
  }
}

TEST_CASE("mu on basis elements") {
  VectMatrix f = VectMatrix::identity(2), h = VectMatrix::identity(3);
  // mu(i-th diag unit, p-th diag unit) = (i,p)-th diag unit
  for (int i = 0; i < 2; ++i)
    for (int p = 0; p < 3; ++p) {
      TwoNat m = mu(trace_basis_element(f, i, 1), trace_basis_element(h, p, 1));
      auto coords = trace_coordinates(m);
      for (int t = 0; t < 6; ++t) CHECK(coords[t].is_zero() == (t != i * 3 + p));
    }
  // the images span ttr(Id box Id)
  CHECK(rank(mu_matrix(f, h, 1)) == 6);
}

TEST_CASE("mu is basis-bijective for stairs box [[2]]") {
  VectMatrix f = stairs();
  VectMatrix h(1, 1);
  h.dims = {{2}};
  CycMatrix m = mu_matrix(f, h, 1);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 4);
  CHECK(rank(m) == 4);
}

TEST_CASE("trace multiplicativity and mu bijectivity, exhaustive small diagonals") {
  std::mt19937_64 rng(25);
  // all pairs with m, n <= 2 and entries <= 2 on the full machinery
  std::vector<VectMatrix> all;
  for (int m = 1; m <= 2; ++m) {
    int cells = m * m;
    int total = 1;
    for (int c = 0; c < cells; ++c) total *= 3;
    for (int mask = 0; mask < total; ++mask) {
      VectMatrix f(m, m);
      int v = mask;
      for (int c = 0; c < cells; ++c) {
        f.dims[c / m][c % m] = v % 3;
        v /= 3;
      }
      all.push_back(f);
    }
  }
  for (const auto& f : all)
    for (const auto& h : all) {
      int lhs = ttr(box(f, h)).total_dim;
      int rhs = ttr(f).total_dim * ttr(h).total_dim;
      CHECK(lhs == rhs);
      if (lhs > 0 && lhs <= 9) {
        CycMatrix m = mu_matrix(f, h, 1);
        CHECK(rank(m) == lhs);
        CHECK(m.cols() == rhs);
      }
    }

  // seeded m,n = 3..4 samples with entries <= 3
  for (int trial = 0; trial < 25; ++trial) {
    int m = 3 + (int)(rng() % 2), n = 3 + (int)(rng() % 2);
    VectMatrix f = random_functor(rng, m, m, 3);
    VectMatrix h = random_functor(rng, n, n, 3);
    CHECK(ttr(box(f, h)).total_dim == ttr(f).total_dim * ttr(h).total_dim);
    CycMatrix mm = mu_matrix(f, h, 1);
    CHECK(rank(mm) == ttr(f).total_dim * ttr(h).total_dim);
  }
}

TEST_CASE("nat_invert") {
  std::mt19937_64 rng(26);
  VectMatrix p = VectMatrix::permutation(random_perm(rng, 3));
  TwoNat n(p, p, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (p.dims[i][j] == 1) {
        CycMatrix b(1, 1, 4);
        b.set(0, 0, CycScalar::root_of_unity(4, 1 + (long)(rng() % 3)));
        n.blocks[i][j] = b;
      }
  TwoNat inv = nat_invert(n);
  CHECK(vcompose(inv, n) == TwoNat::identity(p, 4));
  CHECK(vcompose(n, inv) == TwoNat::identity(p, 4));
}
