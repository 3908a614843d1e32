#include "cattrace/tworep.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cattrace {

std::vector<int> TwoRep::trace_basis(int g) const {
  std::vector<int> fix;
  for (int j = 0; j < m; ++j)
    if (perm[g][j] == j) fix.push_back(j);
  return fix;
}

TwoRep TwoRep::promoted(int target) const {
  TwoRep r = *this;
  r.conductor = target;
  for (auto& row : r.lambda)
    for (auto& cell : row)
      for (auto& s : cell) s = promote(s, target);
  for (auto& s : r.unit_lambda) s = promote(s, target);
  return r;
}

std::string TwoRepViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case kPermutation: os << "permutation law fails at (g,h)=(" << g << "," << h << ")"; break;
    case kPentagon:
      os << "pentagon fails at (g,h,k)=(" << g << "," << h << "," << k << "), column " << j;
      break;
    case kUnit: os << "unit triangle fails at g=" << g << ", column " << j; break;
    case kZeroScalar: os << "zero coherence scalar at (g,h)=(" << g << "," << h << "), column " << j; break;
  }
  return os.str();
}

std::vector<TwoRepViolation> validate_two_rep(const TwoRep& rep) {
  std::vector<TwoRepViolation> v;
  const auto& G = *rep.group;
  int n = G.order(), m = rep.m;
  int id = G.identity();

  for (int g = 0; g < n; ++g) {
    std::vector<bool> seen(m, false);
    for (int j = 0; j < m; ++j) {
      if (rep.perm[g][j] < 0 || rep.perm[g][j] >= m || seen[rep.perm[g][j]]) {
        v.push_back({TwoRepViolation::kPermutation, g, -1, -1, j});
        break;
      }
      seen[rep.perm[g][j]] = true;
    }
  }
  for (int j = 0; j < m; ++j)
    if (rep.perm[id][j] != j) {
      v.push_back({TwoRepViolation::kPermutation, id, -1, -1, j});
      break;
    }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      for (int j = 0; j < m; ++j)
        if (rep.perm[g][rep.perm[h][j]] != rep.perm[G.op(g, h)][j]) {
          v.push_back({TwoRepViolation::kPermutation, g, h, -1, j});
          j = m;
        }
    }

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int j = 0; j < m; ++j)
        if (rep.lam(g, h, j).is_zero()) v.push_back({TwoRepViolation::kZeroScalar, g, h, -1, j});
  for (int j = 0; j < m; ++j)
    if (rep.unit_lambda[j].is_zero()) v.push_back({TwoRepViolation::kZeroScalar, id, -1, -1, j});
  if (!v.empty()) return v;  // scalar data must be invertible before the identities

  // pentagon: lambda_{gh,k}(j) lambda_{g,h}(pi_k(j)) = lambda_{g,hk}(j) lambda_{h,k}(j)
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < m; ++j) {
          CycScalar lhs = cyc_mul(rep.lam(G.op(g, h), k, j), rep.lam(g, h, rep.pi(k, j)));
          CycScalar rhs = cyc_mul(rep.lam(g, G.op(h, k), j), rep.lam(h, k, j));
          if (lhs != rhs) v.push_back({TwoRepViolation::kPentagon, g, h, k, j});
        }

  // both unit triangle orientations:
  //   lambda_{g,1}(j) = unit_lambda(j) and lambda_{1,g}(j) = unit_lambda(pi_g(j))
  for (int g = 0; g < n; ++g)
    for (int j = 0; j < m; ++j) {
      if (rep.lam(g, id, j) != rep.unit_lambda[j])
        v.push_back({TwoRepViolation::kUnit, g, -1, -1, j});
      if (rep.lam(id, g, j) != rep.unit_lambda[rep.pi(g, j)])
        v.push_back({TwoRepViolation::kUnit, g, -1, -2, j});
    }
  return v;
}

TwoRep from_cocycle(const Cocycle& c) {
  if (!validate(c).empty()) throw std::invalid_argument("invalid cocycle");
  const auto& G = *c.group;
  int n = G.order();
  TwoRep rep;
  rep.group = c.group;
  rep.m = 1;
  rep.conductor = c.modulus;
  rep.perm.assign(n, {0});
  rep.lambda.assign(n, std::vector<std::vector<CycScalar>>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) rep.lambda[g][h] = {c.value(g, h)};
  rep.unit_lambda = {c.value(G.identity(), G.identity())};
  return rep;
}

TwoRep from_group_action_on_set(const GroupPtr& g, const std::vector<std::vector<int>>& action,
                                const std::optional<Cocycle>& twist) {
  int n = g->order();
  if ((int)action.size() != n) throw std::invalid_argument("action must cover the whole group");
  int m = (int)action[0].size();
  // action must be a homomorphism to permutations
  for (int a = 0; a < n; ++a) {
    if ((int)action[a].size() != m) throw std::invalid_argument("action degree mismatch");
    std::vector<bool> seen(m, false);
    for (int x : action[a]) {
      if (x < 0 || x >= m || seen[x]) throw std::invalid_argument("action entry is not a permutation");
      seen[x] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int j = 0; j < m; ++j)
        if (action[a][action[b][j]] != action[g->op(a, b)][j])
          throw std::invalid_argument("input is not a group action");
  int conductor = twist ? twist->modulus : 1;
  if (twist && twist->group->order() != n)
    throw std::invalid_argument("twisting cocycle lives on a different group");
  if (twist && !validate(*twist).empty()) throw std::invalid_argument("invalid twisting cocycle");
  TwoRep rep;
  rep.group = g;
  rep.m = m;
  rep.conductor = conductor;
  rep.perm = action;
  rep.lambda.assign(n, std::vector<std::vector<CycScalar>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CycScalar v = twist ? twist->value(a, b) : CycScalar::one(conductor);
      rep.lambda[a][b].assign(m, v);
    }
  CycScalar u = twist ? twist->value(g->identity(), g->identity()) : CycScalar::one(conductor);
  rep.unit_lambda.assign(m, u);
  return rep;
}

TwoNat phi_nat(const TwoRep& rep, int g, int h) {
  const auto& G = *rep.group;
  VectMatrix src = compose(rep.functor_of(g), rep.functor_of(h));
  VectMatrix dst = rep.functor_of(G.op(g, h));
  TwoNat nat(src, dst, rep.conductor);
  for (int j = 0; j < rep.m; ++j) {
    int i = rep.pi(G.op(g, h), j);
    CycMatrix b(1, 1, rep.conductor);
    b.set(0, 0, rep.lam(g, h, j));
    nat.blocks[i][j] = std::move(b);
  }
  return nat;
}

TwoNat unit_nat(const TwoRep& rep) {
  VectMatrix id_f = VectMatrix::identity(rep.m);
  TwoNat nat(rep.functor_of(rep.group->identity()), id_f, rep.conductor);
  for (int j = 0; j < rep.m; ++j) {
    CycMatrix b(1, 1, rep.conductor);
    b.set(0, 0, rep.unit_lambda[j]);
    nat.blocks[j][j] = std::move(b);
  }
  return nat;
}

CycMatrix psi(const TwoRep& rep, int s, int g) {
  const auto& G = *rep.group;
  int si = G.inverse(s);
  int sgs = G.conjugate(s, g);
  VectMatrix rs = rep.functor_of(s), rg = rep.functor_of(g), rsi = rep.functor_of(si);

  // unit of rho(s^{-1}) -| rho(s): Id => rho(s) rho(s^{-1}), the inverse of
  // phi_1 . phi_{s,s^{-1}}
  TwoNat counit_like = vcompose(unit_nat(rep), phi_nat(rep, s, si));
  TwoNat eta = nat_invert(counit_like);

  // double composition isomorphism rho(s) rho(g) rho(s^{-1}) => rho(sgs^{-1})
  TwoNat phi_sg_si = phi_nat(rep, G.op(s, g), si);
  TwoNat route_a = vcompose(phi_sg_si, hcompose(phi_nat(rep, s, g), TwoNat::identity(rsi, rep.conductor)));

  std::vector<int> src_basis = rep.trace_basis(g);
  std::vector<int> dst_basis = rep.trace_basis(sgs);
  CycMatrix result((int)dst_basis.size(), (int)src_basis.size(), rep.conductor);
  for (size_t a = 0; a < src_basis.size(); ++a) {
    TwoNat xi = trace_from_coordinates(rg, [&] {
      std::vector<CycScalar> coords((int)src_basis.size(), CycScalar::zero(rep.conductor));
      coords[a] = CycScalar::one(rep.conductor);
      return coords;
    }(), rep.conductor);
    TwoNat conj = hcompose(hcompose(TwoNat::identity(rs, rep.conductor), xi),
                           TwoNat::identity(rsi, rep.conductor));
    TwoNat total = vcompose(route_a, vcompose(conj, eta));
    std::vector<CycScalar> out = trace_coordinates(total);
    for (size_t b = 0; b < dst_basis.size(); ++b) result.set((int)b, (int)a, out[b]);
  }
  return result;
}

CycScalar two_character(const TwoRep& rep, int g, int h) {
  const auto& G = *rep.group;
  if (G.op(g, h) != G.op(h, g))
    throw std::invalid_argument("two_character: elements do not commute");
  return mat_trace(psi(rep, h, g));
}

CatCharacter character_data(const TwoRep& rep) {
  CatCharacter c;
  int n = rep.group->order();
  c.bases.resize(n);
  for (int g = 0; g < n; ++g) c.bases[g] = rep.trace_basis(g);
  c.psis.assign(n, std::vector<CycMatrix>(n));
  for (int s = 0; s < n; ++s)
    for (int g = 0; g < n; ++g) c.psis[s][g] = psi(rep, s, g);
  return c;
}

TwoRep box_rep(const TwoRep& a, const TwoRep& b) {
  GroupPtr gh = direct_product(a.group, b.group);
  int conductor = std::lcm(a.conductor, b.conductor);
  TwoRep ap = a.promoted(conductor), bp = b.promoted(conductor);
  int na = a.group->order(), nb = b.group->order();
  int m = a.m * b.m;
  TwoRep r;
  r.group = gh;
  r.m = m;
  r.conductor = conductor;
  auto gidx = [nb](int x, int y) { return x * nb + y; };
  auto midx = [&](int ja, int jb) { return ja * b.m + jb; };
  r.perm.assign(na * nb, std::vector<int>(m));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int ja = 0; ja < a.m; ++ja)
        for (int jb = 0; jb < b.m; ++jb)
          r.perm[gidx(x, y)][midx(ja, jb)] = midx(a.perm[x][ja], b.perm[y][jb]);
  r.lambda.assign(na * nb, std::vector<std::vector<CycScalar>>(na * nb));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          auto& cell = r.lambda[gidx(x1, y1)][gidx(x2, y2)];
          cell.resize(m, CycScalar::zero(conductor));
          for (int ja = 0; ja < a.m; ++ja)
            for (int jb = 0; jb < b.m; ++jb)
              cell[midx(ja, jb)] = cyc_mul(ap.lam(x1, x2, ja), bp.lam(y1, y2, jb));
        }
  r.unit_lambda.resize(m, CycScalar::zero(conductor));
  for (int ja = 0; ja < a.m; ++ja)
    for (int jb = 0; jb < b.m; ++jb)
      r.unit_lambda[midx(ja, jb)] = cyc_mul(ap.unit_lambda[ja], bp.unit_lambda[jb]);
  return r;
}

TwoRep restrict_rep(const TwoRep& rep, const GroupPtr& h, const std::vector<int>& hom) {
  const auto& H = *h;
  if ((int)hom.size() != H.order()) throw std::invalid_argument("hom must be total on H");
  for (int x = 0; x < H.order(); ++x)
    for (int y = 0; y < H.order(); ++y)
      if (rep.group->op(hom[x], hom[y]) != hom[H.op(x, y)])
        throw std::invalid_argument("hom is not a group homomorphism");
  TwoRep r;
  r.group = h;
  r.m = rep.m;
  r.conductor = rep.conductor;
  r.perm.resize(H.order());
  r.lambda.assign(H.order(), std::vector<std::vector<CycScalar>>(H.order()));
  for (int x = 0; x < H.order(); ++x) {
    r.perm[x] = rep.perm[hom[x]];
    for (int y = 0; y < H.order(); ++y) r.lambda[x][y] = rep.lambda[hom[x]][hom[y]];
  }
  r.unit_lambda = rep.unit_lambda;
  return r;
}

TwoRep diagonal_restriction(const TwoRep& boxed, const GroupPtr& g) {
  int n = g->order();
  if (boxed.group->order() != n * n)
    throw std::invalid_argument("diagonal restriction expects a G x G representation");
  std::vector<int> hom(n);
  for (int x = 0; x < n; ++x) hom[x] = x * n + x;
  return restrict_rep(boxed, g, hom);
}

TwistedAlgebraPresentation twisted_group_algebra(const TwoRep& rep) {
  auto violations = validate_two_rep(rep);
  if (!violations.empty())
    throw std::invalid_argument("invalid 2-representation: " + violations.front().describe());
  const auto& G = *rep.group;
  int n = G.order(), c = rep.conductor;
  TwistedAlgebraPresentation p;
  std::vector<std::vector<int>> pos(n, std::vector<int>(rep.m, -1));
  for (int g = 0; g < n; ++g)
    for (int j : rep.trace_basis(g)) {
      pos[g][j] = (int)p.basis.size();
      p.basis.emplace_back(g, j);
    }
  int dim = (int)p.basis.size();
  std::vector<CycScalar> sc((size_t)dim * dim * dim, CycScalar::zero(c));
  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v) {
      auto [g, i] = p.basis[u];
      auto [h, j] = p.basis[v];
      if (i != j) continue;  // product is horizontal composition then phi_{g,h}
      int gh = G.op(g, h);
      if (rep.pi(gh, j) != j) throw std::logic_error("trace grading broken");
      sc[((size_t)u * dim + v) * dim + pos[gh][j]] = rep.lam(g, h, j);
    }
  std::vector<CycScalar> unit(dim, CycScalar::zero(c));
  for (int j : rep.trace_basis(G.identity()))
    unit[pos[G.identity()][j]] = cyc_inv(rep.unit_lambda[j]);
  p.algebra = std::make_shared<const StructAlgebra>(StructAlgebra(dim, c, std::move(sc), std::move(unit)));
  // G acts through the psi matrices, g-summand to sgs^{-1}-summand.
  for (int s = 0; s < n; ++s) {
    CycMatrix act(dim, dim, c);
    for (int g = 0; g < n; ++g) {
      auto src = rep.trace_basis(g);
      if (src.empty()) continue;
      int tgt = G.conjugate(s, g);
      auto dst = rep.trace_basis(tgt);
      CycMatrix ps = psi(rep, s, g);
      for (size_t b = 0; b < dst.size(); ++b)
        for (size_t a = 0; a < src.size(); ++a)
          if (!ps.at((int)b, (int)a).is_zero())
            act.set(pos[tgt][dst[b]], pos[g][src[a]], ps.at((int)b, (int)a));
    }
    p.g_action.push_back(std::move(act));
  }
  return p;
}

int invariants_dim(const TwoRep& rep) {
  TwistedAlgebraPresentation p = twisted_group_algebra(rep);
  int dim = p.algebra->dim(), c = rep.conductor;
  std::vector<CycMatrix> rows;
  for (const auto& act : p.g_action)
    rows.push_back(mat_sub(act, CycMatrix::identity(dim, c)));
  return (int)kernel_basis(vstack(rows)).size();
}

CycScalar character_sum(const TwoRep& rep) {
  const auto& G = *rep.group;
  CycScalar total = CycScalar::zero(rep.conductor);
  for (auto [g, h] : G.commuting_pairs()) total = cyc_add(total, two_character(rep, g, h));
  return cyc_scale(total, Rational(1, G.order()));
}

int inner_product_dim(const TwoRep& a, const TwoRep& b) {
  if (a.group->order() != b.group->order() || a.group->table() != b.group->table())
    throw std::invalid_argument("inner product needs representations of the same group");
  return invariants_dim(diagonal_restriction(box_rep(a, b), a.group));
}

CycScalar inner_product_character_sum(const TwoRep& a, const TwoRep& b) {
  if (a.group->order() != b.group->order() || a.group->table() != b.group->table())
    throw std::invalid_argument("inner product needs representations of the same group");
  const auto& G = *a.group;
  int conductor = std::lcm(a.conductor, b.conductor);
  CycScalar total = CycScalar::zero(conductor);
  for (auto [g, h] : G.commuting_pairs())
    total = cyc_add(total, cyc_mul(promote(two_character(a, g, h), conductor),
                                   promote(two_character(b, g, h), conductor)));
  return cyc_scale(total, Rational(1, G.order()));
}

}  // namespace cattrace
