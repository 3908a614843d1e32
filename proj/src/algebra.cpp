#include "cattrace/algebra.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cattrace {

StructAlgebra::StructAlgebra(int dim, int conductor, std::vector<CycScalar> sc,
                             std::vector<CycScalar> unit)
    : dim_(dim), conductor_(conductor), sc_(std::move(sc)), unit_(std::move(unit)) {
  if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
  if (sc_.size() != (size_t)dim * dim * dim)
    throw std::invalid_argument("structure constant tensor has wrong size");
  if (unit_.size() != (size_t)dim) throw std::invalid_argument("unit vector has wrong size");
  for (const auto& s : sc_)
    if (s.conductor() != conductor_)
      throw std::invalid_argument("structure constants must share the algebra conductor");
  for (const auto& s : unit_)
    if (s.conductor() != conductor_)
      throw std::invalid_argument("unit must share the algebra conductor");
}

std::vector<CycScalar> StructAlgebra::mul(const std::vector<CycScalar>& x,
                                          const std::vector<CycScalar>& y) const {
  if ((int)x.size() != dim_ || (int)y.size() != dim_)
    throw std::invalid_argument("element dimension mismatch");
  std::vector<CycScalar> r(dim_, CycScalar::zero(conductor_));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      CycScalar xy = cyc_mul(x[i], y[j]);
      for (int k = 0; k < dim_; ++k) {
        const CycScalar& c = sc(i, j, k);
        if (!c.is_zero()) r[k] = cyc_add(r[k], cyc_mul(xy, c));
      }
    }
  }
  return r;
}

CycMatrix StructAlgebra::left_matrix(int i) const {
  CycMatrix m(dim_, dim_, conductor_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.set(k, j, sc(i, j, k));
  return m;
}

CycMatrix StructAlgebra::right_matrix(int i) const {
  CycMatrix m(dim_, dim_, conductor_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.set(k, j, sc(j, i, k));
  return m;
}

CycMatrix StructAlgebra::left_matrix_of(const std::vector<CycScalar>& x) const {
  CycMatrix m(dim_, dim_, conductor_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const CycScalar& c = sc(i, j, k);
        if (!c.is_zero()) m.set(k, j, cyc_add(m.at(k, j), cyc_mul(x[i], c)));
      }
  }
  return m;
}

std::vector<std::string> StructAlgebra::validate() const {
  std::vector<std::string> errs;
  std::vector<CycMatrix> left(dim_, CycMatrix());
  for (int i = 0; i < dim_; ++i) left[i] = left_matrix(i);
  for (int i = 0; i < dim_ && errs.size() < 8; ++i)
    for (int j = 0; j < dim_ && errs.size() < 8; ++j) {
      std::vector<CycScalar> eij(dim_);
      for (int k = 0; k < dim_; ++k) eij[k] = sc(i, j, k);
      if (!(mat_mul(left[i], left[j]) == left_matrix_of(eij))) {
        std::ostringstream os;
        os << "associativity fails at basis pair (" << i << "," << j << ")";
        errs.push_back(os.str());
      }
    }
  if (!(left_matrix_of(unit_) == CycMatrix::identity(dim_, conductor_)))
    errs.push_back("left unit law fails");
  for (int i = 0; i < dim_; ++i) {
    std::vector<CycScalar> ei(dim_, CycScalar::zero(conductor_));
    ei[i] = CycScalar::one(conductor_);
    if (mul(ei, unit_) != ei) {
      errs.push_back("right unit law fails at basis " + std::to_string(i));
      break;
    }
  }
  return errs;
}

StructAlgebra StructAlgebra::promoted(int conductor) const {
  std::vector<CycScalar> sc2, u2;
  sc2.reserve(sc_.size());
  for (const auto& s : sc_) sc2.push_back(promote(s, conductor));
  for (const auto& s : unit_) u2.push_back(promote(s, conductor));
  return StructAlgebra(dim_, conductor, std::move(sc2), std::move(u2));
}

namespace {

CycMatrix act_of(const std::vector<CycMatrix>& acts, const std::vector<CycScalar>& x, int dim,
                 int conductor) {
  CycMatrix m(dim, dim, conductor);
  for (size_t i = 0; i < acts.size(); ++i)
    if (!x[i].is_zero()) m = mat_add(m, mat_scale(acts[i], x[i]));
  return m;
}

std::vector<CycScalar> basis_vec(int dim, int i, int conductor) {
  std::vector<CycScalar> v(dim, CycScalar::zero(conductor));
  v[i] = CycScalar::one(conductor);
  return v;
}

}  // namespace

std::vector<std::string> Module::validate() const {
  std::vector<std::string> errs;
  const auto& A = *algebra;
  if ((int)act.size() != A.dim()) return {"module action count mismatch"};
  for (int i = 0; i < A.dim() && errs.size() < 4; ++i)
    for (int j = 0; j < A.dim() && errs.size() < 4; ++j) {
      std::vector<CycScalar> eij(A.dim());
      for (int k = 0; k < A.dim(); ++k) eij[k] = A.sc(i, j, k);
      if (!(mat_mul(act[i], act[j]) == act_of(act, eij, dim, A.conductor())))
        errs.push_back("module law fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (!(act_of(act, A.unit(), dim, A.conductor()) == CycMatrix::identity(dim, A.conductor())))
    errs.push_back("module unit law fails");
  return errs;
}

std::vector<std::string> Bimodule::validate() const {
  std::vector<std::string> errs;
  const auto& A = *algebra;
  int d = A.dim(), c = A.conductor();
  if ((int)left_act.size() != d || (int)right_act.size() != d)
    return {"bimodule action count mismatch"};
  for (int i = 0; i < d && errs.size() < 6; ++i)
    for (int j = 0; j < d && errs.size() < 6; ++j) {
      std::vector<CycScalar> eij(d);
      for (int k = 0; k < d; ++k) eij[k] = A.sc(i, j, k);
      if (!(mat_mul(left_act[i], left_act[j]) == act_of(left_act, eij, dim, c)))
        errs.push_back("left action is not an algebra map at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
      if (!(mat_mul(right_act[j], right_act[i]) == act_of(right_act, eij, dim, c)))
        errs.push_back("right action is not an anti-map at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
      if (!(mat_mul(left_act[i], right_act[j]) == mat_mul(right_act[j], left_act[i])))
        errs.push_back("left and right actions do not commute at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
    }
  if (!(act_of(left_act, A.unit(), dim, c) == CycMatrix::identity(dim, c)))
    errs.push_back("left unit fails on the bimodule");
  if (!(act_of(right_act, A.unit(), dim, c) == CycMatrix::identity(dim, c)))
    errs.push_back("right unit fails on the bimodule");
  return errs;
}

std::vector<std::string> GroupAction::validate() const {
  std::vector<std::string> errs;
  const auto& A = *algebra;
  const auto& G = *group;
  int d = A.dim(), c = A.conductor();
  if ((int)autos.size() != G.order()) return {"action matrix count mismatch"};
  if (!(autos[G.identity()] == CycMatrix::identity(d, c)))
    errs.push_back("auto at the identity is not the identity matrix");
  for (int g = 0; g < G.order() && errs.size() < 6; ++g) {
    if (apply_vec(autos[g], A.unit()) != A.unit())
      errs.push_back("auto " + std::to_string(g) + " does not preserve the unit");
    bool bad = false;
    for (int i = 0; i < d && !bad; ++i)
      for (int j = 0; j < d && !bad; ++j) {
        auto lhs = apply_vec(autos[g], A.mul(basis_vec(d, i, c), basis_vec(d, j, c)));
        auto rhs = A.mul(apply_vec(autos[g], basis_vec(d, i, c)),
                         apply_vec(autos[g], basis_vec(d, j, c)));
        if (lhs != rhs) {
          errs.push_back("auto " + std::to_string(g) + " is not an algebra map at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
          bad = true;
        }
      }
  }
  for (int g = 0; g < G.order() && errs.size() < 8; ++g)
    for (int h = 0; h < G.order(); ++h)
      if (!(mat_mul(autos[g], autos[h]) == autos[G.op(g, h)])) {
        errs.push_back("autos fail the homomorphism law at (" + std::to_string(g) + "," +
                       std::to_string(h) + ")");
        g = G.order();
        break;
      }
  return errs;
}

std::vector<std::string> EquivariantBimodule::validate() const {
  std::vector<std::string> errs = base.validate();
  auto action_errs = action.validate();
  errs.insert(errs.end(), action_errs.begin(), action_errs.end());
  const auto& G = *action.group;
  const auto& A = *base.algebra;
  int d = A.dim(), c = A.conductor();
  if ((int)compat.size() != G.order()) return {"compat matrix count mismatch"};
  if (!(compat[G.identity()] == CycMatrix::identity(base.dim, c)))
    errs.push_back("u_1 is not the identity");
  for (int g = 0; g < G.order() && errs.size() < 10; ++g) {
    for (int h = 0; h < G.order(); ++h)
      if (!(mat_mul(compat[g], compat[h]) == compat[G.op(g, h)])) {
        errs.push_back("u_g u_h != u_{gh} at (" + std::to_string(g) + "," + std::to_string(h) + ")");
        break;
      }
    for (int a = 0; a < d; ++a) {
      std::vector<CycScalar> ga = apply_vec(action.autos[g], basis_vec(d, a, c));
      if (!(mat_mul(compat[g], base.left_act[a]) ==
            mat_mul(act_of(base.left_act, ga, base.dim, c), compat[g]))) {
        errs.push_back("u_g(a.m) != g(a).u_g(m) at g=" + std::to_string(g) +
                       " a=" + std::to_string(a));
        break;
      }
      if (!(mat_mul(compat[g], base.right_act[a]) ==
            mat_mul(act_of(base.right_act, ga, base.dim, c), compat[g]))) {
        errs.push_back("u_g(m.a) != u_g(m).g(a) at g=" + std::to_string(g) +
                       " a=" + std::to_string(a));
        break;
      }
    }
  }
  return errs;
}

StructAlgebra diagonal_algebra(int n, int conductor) {
  std::vector<CycScalar> sc((size_t)n * n * n, CycScalar::zero(conductor));
  std::vector<CycScalar> unit(n, CycScalar::one(conductor));
  for (int i = 0; i < n; ++i) sc[((size_t)i * n + i) * n + i] = CycScalar::one(conductor);
  return StructAlgebra(n, conductor, std::move(sc), std::move(unit));
}

StructAlgebra matrix_algebra(int n, int conductor) {
  int d = n * n;  // basis E_{ab} at index a*n + b
  std::vector<CycScalar> sc((size_t)d * d * d, CycScalar::zero(conductor));
  auto idx = [n](int a, int b) { return a * n + b; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        sc[((size_t)idx(a, b) * d + idx(b, e)) * d + idx(a, e)] = CycScalar::one(conductor);
  std::vector<CycScalar> unit(d, CycScalar::zero(conductor));
  for (int a = 0; a < n; ++a) unit[idx(a, a)] = CycScalar::one(conductor);
  return StructAlgebra(d, conductor, std::move(sc), std::move(unit));
}

StructAlgebra group_algebra(const GroupPtr& g, int conductor) {
  int n = g->order();
  std::vector<CycScalar> sc((size_t)n * n * n, CycScalar::zero(conductor));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      sc[((size_t)a * n + b) * n + g->op(a, b)] = CycScalar::one(conductor);
  std::vector<CycScalar> unit(n, CycScalar::zero(conductor));
  unit[g->identity()] = CycScalar::one(conductor);
  return StructAlgebra(n, conductor, std::move(sc), std::move(unit));
}

StructAlgebra twisted_group_algebra_from_cocycle(const Cocycle& c) {
  if (!validate(c).empty()) throw std::invalid_argument("invalid cocycle");
  const auto& G = *c.group;
  int n = G.order(), m = c.modulus;
  std::vector<CycScalar> sc((size_t)n * n * n, CycScalar::zero(m));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      sc[((size_t)a * n + b) * n + G.op(a, b)] = c.value(a, b);
  // b_1 b_1 = c(1,1) b_1, so the unit is c(1,1)^{-1} b_1.
  std::vector<CycScalar> unit(n, CycScalar::zero(m));
  unit[G.identity()] = cyc_inv(c.value(G.identity(), G.identity()));
  return StructAlgebra(n, m, std::move(sc), std::move(unit));
}

StructAlgebra tensor_algebra(const StructAlgebra& a, const StructAlgebra& b) {
  if (a.conductor() != b.conductor())
    throw std::invalid_argument("tensor_algebra: conductor mismatch");
  int da = a.dim(), db = b.dim(), d = da * db, c = a.conductor();
  auto idx = [db](int i, int j) { return i * db + j; };
  std::vector<CycScalar> sc((size_t)d * d * d, CycScalar::zero(c));
  for (int i1 = 0; i1 < da; ++i1)
    for (int j1 = 0; j1 < db; ++j1)
      for (int i2 = 0; i2 < da; ++i2)
        for (int j2 = 0; j2 < db; ++j2)
          for (int k1 = 0; k1 < da; ++k1) {
            if (a.sc(i1, i2, k1).is_zero()) continue;
            for (int k2 = 0; k2 < db; ++k2) {
              if (b.sc(j1, j2, k2).is_zero()) continue;
              sc[((size_t)idx(i1, j1) * d + idx(i2, j2)) * d + idx(k1, k2)] =
                  cyc_mul(a.sc(i1, i2, k1), b.sc(j1, j2, k2));
            }
          }
  std::vector<CycScalar> unit(d, CycScalar::zero(c));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) unit[idx(i, j)] = cyc_mul(a.unit()[i], b.unit()[j]);
  return StructAlgebra(d, c, std::move(sc), std::move(unit));
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  Bimodule m;
  m.algebra = a;
  m.dim = a->dim();
  for (int i = 0; i < a->dim(); ++i) {
    m.left_act.push_back(a->left_matrix(i));
    m.right_act.push_back(a->right_matrix(i));
  }
  return m;
}

Bimodule twisted_bimodule(const AlgebraPtr& a, const GroupAction& action, int g) {
  Bimodule m = regular_bimodule(a);
  int d = a->dim(), c = a->conductor();
  // (m g) . a = (m . g(a)) g: right action through auto_g.
  for (int i = 0; i < d; ++i) {
    std::vector<CycScalar> gi = apply_vec(action.autos[g], basis_vec(d, i, c));
    CycMatrix r(d, d, c);
    for (int l = 0; l < d; ++l)
      if (!gi[l].is_zero()) r = mat_add(r, mat_scale(a->right_matrix(l), gi[l]));
    m.right_act[i] = std::move(r);
  }
  return m;
}

Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n, const AlgebraPtr& ab) {
  Bimodule r;
  r.algebra = ab;
  r.dim = m.dim * n.dim;
  int da = m.algebra->dim(), db = n.algebra->dim();
  if (ab->dim() != da * db) throw std::invalid_argument("tensor_bimodule: algebra mismatch");
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      r.left_act.push_back(kron(m.left_act[i], n.left_act[j]));
      r.right_act.push_back(kron(m.right_act[i], n.right_act[j]));
    }
  return r;
}

std::vector<CycMatrix> center(const StructAlgebra& a) {
  std::vector<CycMatrix> rows;
  for (int i = 0; i < a.dim(); ++i) rows.push_back(mat_sub(a.left_matrix(i), a.right_matrix(i)));
  return kernel_basis(vstack(rows));
}

std::vector<CycMatrix> bimodule_center(const Bimodule& m) {
  std::vector<CycMatrix> rows;
  for (int i = 0; i < m.algebra->dim(); ++i)
    rows.push_back(mat_sub(m.left_act[i], m.right_act[i]));
  return kernel_basis(vstack(rows));
}

StructAlgebra crossed_product(const AlgebraPtr& a, const GroupAction& action) {
  const auto& G = *action.group;
  int d = a->dim(), n = G.order(), c = a->conductor(), D = d * n;
  std::vector<CycScalar> sc((size_t)D * D * D, CycScalar::zero(c));
  for (int i = 0; i < d; ++i)
    for (int g = 0; g < n; ++g)
      for (int j = 0; j < d; ++j) {
        // (e_i g)(e_j h) = (e_i * g(e_j)) (gh)
        std::vector<CycScalar> gj = apply_vec(action.autos[g], basis_vec(d, j, c));
        std::vector<CycScalar> prod = a->mul(basis_vec(d, i, c), gj);
        for (int h = 0; h < n; ++h) {
          int gh = G.op(g, h);
          for (int k = 0; k < d; ++k)
            if (!prod[k].is_zero())
              sc[((size_t)crossed_index(i, g, n) * D + crossed_index(j, h, n)) * D +
                 crossed_index(k, gh, n)] = prod[k];
        }
      }
  std::vector<CycScalar> unit(D, CycScalar::zero(c));
  for (int i = 0; i < d; ++i) unit[crossed_index(i, G.identity(), n)] = a->unit()[i];
  return StructAlgebra(D, c, std::move(sc), std::move(unit));
}

CenterDecompositionReport center_decomposition(const AlgebraPtr& a, const GroupAction& action) {
  CenterDecompositionReport report;
  const auto& G = *action.group;
  const auto& conj = G.conjugacy();
  int d = a->dim(), n = G.order(), cnd = a->conductor();

  for (const auto& cls : conj.classes) {
    CenterDecompositionClass entry;
    entry.representative = cls.front();
    int g = entry.representative;
    Bimodule ag = twisted_bimodule(a, action, g);
    entry.center_basis = bimodule_center(ag);
    entry.center_dim = (int)entry.center_basis.size();
    if (entry.center_dim == 0) {
      report.classes.push_back(std::move(entry));
      continue;
    }
    CycMatrix k = hcat(entry.center_basis);
    // C_g acts by m -> h(m); closure is verified, not assumed.
    std::vector<CycMatrix> fixed_rows;
    for (int h : conj.centralizers[g]) {
      auto coords = solve(k, mat_mul(action.autos[h], k));
      if (!coords) throw std::logic_error("centralizer action does not preserve Center_A(Ag)");
      fixed_rows.push_back(mat_sub(*coords, CycMatrix::identity(entry.center_dim, cnd)));
    }
    auto inv_coords = kernel_basis(vstack(fixed_rows));
    entry.invariant_dim = (int)inv_coords.size();
    for (const auto& v : inv_coords) entry.invariant_basis.push_back(mat_mul(k, v));
    report.classes.push_back(std::move(entry));
  }

  for (const auto& e : report.classes) report.sum_invariant_dims += e.invariant_dim;

  StructAlgebra cp = crossed_product(a, action);
  report.crossed_center_dim = (int)center(cp).size();
  report.dims_match = report.crossed_center_dim == report.sum_invariant_dims;

  // Assemble the inverse map: transport the class-rep component over the
  // class by conjugation and read it as a crossed-product element.
  for (const auto& e : report.classes) {
    int g = e.representative;
    for (const auto& mcol : e.invariant_basis) {
      std::vector<CycScalar> z((size_t)d * n, CycScalar::zero(cnd));
      const auto& cls = conj.classes[conj.class_of[g]];
      for (int x : cls) {
        int t = -1;
        for (int cand = 0; cand < n; ++cand)
          if (G.conjugate(cand, g) == x) {
            t = cand;
            break;
          }
        std::vector<CycScalar> mv;
        mv.reserve(d);
        for (int i = 0; i < d; ++i) mv.push_back(mcol.at(i, 0));
        std::vector<CycScalar> tm = apply_vec(action.autos[t], mv);
        for (int i = 0; i < d; ++i) z[crossed_index(i, x, n)] = tm[i];
      }
      report.assembled.push_back(std::move(z));
    }
  }

  report.assembled_central = true;
  int D = d * n;
  for (const auto& z : report.assembled) {
    for (int b = 0; b < D && report.assembled_central; ++b) {
      auto eb = basis_vec(D, b, cnd);
      if (cp.mul(eb, z) != cp.mul(z, eb)) report.assembled_central = false;
    }
    if (!report.assembled_central) break;
  }

  if (!report.assembled.empty()) {
    std::vector<CycMatrix> cols;
    for (const auto& z : report.assembled) cols.push_back(CycMatrix::column(z));
    CycMatrix span = hcat(cols);
    report.assembled_spans_center = rank(span) == (int)report.assembled.size() &&
                                    (int)report.assembled.size() == report.crossed_center_dim;
    report.assembled_multiplicative = true;
    for (const auto& za : report.assembled) {
      for (const auto& zb : report.assembled)
        if (!solve(span, CycMatrix::column(cp.mul(za, zb)))) {
          report.assembled_multiplicative = false;
          break;
        }
      if (!report.assembled_multiplicative) break;
    }
  } else {
    report.assembled_spans_center = report.crossed_center_dim == 0;
    report.assembled_multiplicative = true;
  }
  return report;
}

int module_hom_dim(const Module& m, const Module& n) {
  if (m.algebra->dim() != n.algebra->dim())
    throw std::invalid_argument("module_hom_dim: modules over different algebras");
  int d = m.algebra->dim(), c = m.algebra->conductor();
  int rows_per = n.dim * m.dim;
  CycMatrix sys(d * rows_per, n.dim * m.dim, c);
  for (int a = 0; a < d; ++a) {
    const CycMatrix& P = m.act[a];  // m.dim x m.dim
    const CycMatrix& Q = n.act[a];  // n.dim x n.dim
    for (int r = 0; r < n.dim; ++r)
      for (int col = 0; col < m.dim; ++col) {
        int row = a * rows_per + r * m.dim + col;
        // (f P - Q f)[r][col] = 0, unknowns f[r'][c'] at r'*m.dim + c'
        for (int cp = 0; cp < m.dim; ++cp)
          if (!P.at(cp, col).is_zero()) {
            int unk = r * m.dim + cp;
            sys.set(row, unk, cyc_add(sys.at(row, unk), P.at(cp, col)));
          }
        for (int rp = 0; rp < n.dim; ++rp)
          if (!Q.at(r, rp).is_zero()) {
            int unk = rp * m.dim + col;
            sys.set(row, unk, cyc_sub(sys.at(row, unk), Q.at(r, rp)));
          }
      }
  }
  return (int)kernel_basis(sys).size();
}

Module induce_module(const AlgebraPtr& a, const GroupAction& action,
                     const AlgebraPtr& crossed, const Module& m) {
  const auto& G = *action.group;
  int d = a->dim(), n = G.order(), c = a->conductor();
  Module ind;
  ind.algebra = crossed;
  ind.dim = n * m.dim;
  ind.act.assign(crossed->dim(), CycMatrix(ind.dim, ind.dim, c));
  // Basis g (x) v at index g*dimM + v; (e_i s).(g (x) v) = sg (x) (sg)^{-1}(e_i).v
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < n; ++s) {
      CycMatrix mat(ind.dim, ind.dim, c);
      for (int g = 0; g < n; ++g) {
        int sg = G.op(s, g);
        std::vector<CycScalar> w = apply_vec(action.autos[G.inverse(sg)], basis_vec(d, i, c));
        CycMatrix block(m.dim, m.dim, c);
        for (int l = 0; l < d; ++l)
          if (!w[l].is_zero()) block = mat_add(block, mat_scale(m.act[l], w[l]));
        for (int r = 0; r < m.dim; ++r)
          for (int col = 0; col < m.dim; ++col)
            if (!block.at(r, col).is_zero())
              mat.set(sg * m.dim + r, g * m.dim + col, block.at(r, col));
      }
      ind.act[crossed_index(i, s, n)] = std::move(mat);
    }
  return ind;
}

Module restrict_module(const AlgebraPtr& a, const GroupAction& action,
                       const AlgebraPtr& /*crossed*/, const Module& n) {
  const auto& G = *action.group;
  Module res;
  res.algebra = a;
  res.dim = n.dim;
  for (int i = 0; i < a->dim(); ++i)
    res.act.push_back(n.act[crossed_index(i, G.identity(), G.order())]);
  return res;
}

AdjunctionReport induction_adjunction_check(const AlgebraPtr& a, const GroupAction& action,
                                            const Module& m, const Module& n) {
  auto crossed = std::make_shared<const StructAlgebra>(crossed_product(a, action));
  if (n.algebra->dim() != crossed->dim())
    throw std::invalid_argument("adjunction: N must be a crossed-product module");
  Module ind = induce_module(a, action, crossed, m);
  Module res = restrict_module(a, action, crossed, n);
  Module n_over_crossed = n;
  n_over_crossed.algebra = crossed;
  AdjunctionReport r;
  r.hom_ind = module_hom_dim(ind, n_over_crossed);
  r.hom_res = module_hom_dim(m, res);
  return r;
}

CountSimplesReport count_simples(const StructAlgebra& a) {
  CountSimplesReport r;
  r.center_dim = (int)center(a).size();
  int d = a.dim(), c = a.conductor();
  // trace of left multiplication by each basis element
  std::vector<CycScalar> tvec;
  for (int l = 0; l < d; ++l) {
    CycScalar t = CycScalar::zero(c);
    for (int j = 0; j < d; ++j) t = cyc_add(t, a.sc(l, j, j));
    tvec.push_back(t);
  }
  CycMatrix gram(d, d, c);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto prod = a.mul(basis_vec(d, i, c), basis_vec(d, j, c));
      CycScalar t = CycScalar::zero(c);
      for (int l = 0; l < d; ++l)
        if (!prod[l].is_zero()) t = cyc_add(t, cyc_mul(prod[l], tvec[l]));
      gram.set(i, j, t);
    }
  r.radical_probe_dim = d - rank(gram);
  r.semisimple_probe_passed = r.radical_probe_dim == 0;
  if (r.semisimple_probe_passed) {
    r.simple_count = r.center_dim;
    r.caveat = "simple count assumes a splitting field; over Q(zeta_n) with n a multiple of "
               "the group exponent and cocycle modulus this holds for the algebras in scope";
  } else {
    r.caveat = "trace form is degenerate; no irreducible count claimed";
  }
  return r;
}

KunnethCenterReport kunneth_center(const AlgebraPtr& a, const Bimodule& m, const AlgebraPtr& b,
                                   const Bimodule& n) {
  if (a->conductor() != b->conductor())
    throw std::invalid_argument("kunneth_center: conductor mismatch");
  KunnethCenterReport r;
  auto ca = bimodule_center(m), cb = bimodule_center(n);
  r.dim_a = (int)ca.size();
  r.dim_b = (int)cb.size();
  auto ab = std::make_shared<const StructAlgebra>(tensor_algebra(*a, *b));
  Bimodule mn = tensor_bimodule(m, n, ab);
  auto cmn = bimodule_center(mn);
  r.dim_tensor = (int)cmn.size();
  if (r.dim_a * r.dim_b != r.dim_tensor) return r;
  if (r.dim_tensor == 0) {
    r.map_bijective = true;
    return r;
  }
  // The canonical map sends z_a (x) z_b to kron(z_a, z_b); check the images
  // land in the center and form a basis.
  std::vector<CycMatrix> images;
  for (const auto& x : ca)
    for (const auto& y : cb) images.push_back(kron(x, y));
  CycMatrix span = hcat(images);
  CycMatrix target = hcat(cmn);
  bool inside = true;
  for (const auto& img : images)
    if (!solve(target, img)) inside = false;
  r.map_bijective = inside && rank(span) == r.dim_tensor;
  return r;
}

EquivariantTraceReport equivariant_trace_action(const EquivariantBimodule& e) {
  auto errs = e.validate();
  if (!errs.empty()) throw std::invalid_argument("equivariant bimodule invalid: " + errs.front());
  EquivariantTraceReport r;
  r.center_basis = bimodule_center(e.base);
  int dim = (int)r.center_basis.size();
  const auto& G = *e.action.group;
  int c = e.base.algebra->conductor();
  if (dim == 0) {
    r.invariant_dim = 0;
    return r;
  }
  CycMatrix k = hcat(r.center_basis);
  for (int g = 0; g < G.order(); ++g) {
    auto coords = solve(k, mat_mul(e.compat[g], k));
    if (!coords) throw std::logic_error("compat action does not preserve the center");
    r.action_on_center.push_back(*coords);
  }
  std::vector<CycMatrix> rows;
  for (const auto& m : r.action_on_center)
    rows.push_back(mat_sub(m, CycMatrix::identity(dim, c)));
  r.invariant_basis = kernel_basis(vstack(rows));
  r.invariant_dim = (int)r.invariant_basis.size();
  return r;
}

EquivariantBimodule equivariant_sum_bimodule(const AlgebraPtr& a, const GroupAction& action) {
  const auto& G = *action.group;
  int d = a->dim(), n = G.order(), c = a->conductor();
  EquivariantBimodule e;
  e.action = action;
  e.base.algebra = a;
  e.base.dim = d * n;
  // index (i, g) -> i*n + g, matching the crossed product
  for (int bidx = 0; bidx < d; ++bidx) {
    CycMatrix left(d * n, d * n, c), right(d * n, d * n, c);
    CycMatrix la = a->left_matrix(bidx);
    for (int g = 0; g < n; ++g) {
      std::vector<CycScalar> gb = apply_vec(action.autos[g], basis_vec(d, bidx, c));
      CycMatrix ra(d, d, c);
      for (int l = 0; l < d; ++l)
        if (!gb[l].is_zero()) ra = mat_add(ra, mat_scale(a->right_matrix(l), gb[l]));
      for (int r2 = 0; r2 < d; ++r2)
        for (int c2 = 0; c2 < d; ++c2) {
          if (!la.at(r2, c2).is_zero())
            left.set(crossed_index(r2, g, n), crossed_index(c2, g, n), la.at(r2, c2));
          if (!ra.at(r2, c2).is_zero())
            right.set(crossed_index(r2, g, n), crossed_index(c2, g, n), ra.at(r2, c2));
        }
    }
    e.base.left_act.push_back(std::move(left));
    e.base.right_act.push_back(std::move(right));
  }
  for (int s = 0; s < n; ++s) {
    CycMatrix u(d * n, d * n, c);
    for (int g = 0; g < n; ++g) {
      int target = G.conjugate(s, g);
      for (int r2 = 0; r2 < d; ++r2)
        for (int c2 = 0; c2 < d; ++c2)
          if (!action.autos[s].at(r2, c2).is_zero())
            u.set(crossed_index(r2, target, n), crossed_index(c2, g, n),
                  action.autos[s].at(r2, c2));
    }
    e.compat.push_back(std::move(u));
  }
  return e;
}

TwistedCenterAlgebra twisted_center_algebra(const AlgebraPtr& a, const GroupAction& action) {
  const auto& G = *action.group;
  int n = G.order(), c = a->conductor();
  TwistedCenterAlgebra r;
  r.center_bases.resize(n);
  r.offsets.resize(n + 1, 0);
  for (int g = 0; g < n; ++g) {
    r.center_bases[g] = bimodule_center(twisted_bimodule(a, action, g));
    r.offsets[g + 1] = r.offsets[g] + (int)r.center_bases[g].size();
  }
  int dim = r.offsets[n];
  if (dim == 0) throw std::logic_error("twisted center algebra is zero-dimensional");
  auto coords_in = [&](int g, const std::vector<CycScalar>& v) {
    if (r.center_bases[g].empty()) {
      for (const auto& s : v)
        if (!s.is_zero()) throw std::logic_error("product left the center component");
      return CycMatrix(0, 1, c);
    }
    CycMatrix k = hcat(r.center_bases[g]);
    auto sol = solve(k, CycMatrix::column(v));
    if (!sol) throw std::logic_error("product left the center component");
    return *sol;
  };
  std::vector<CycScalar> sc((size_t)dim * dim * dim, CycScalar::zero(c));
  for (int g = 0; g < n; ++g)
    for (size_t u = 0; u < r.center_bases[g].size(); ++u)
      for (int h = 0; h < n; ++h)
        for (size_t v = 0; v < r.center_bases[h].size(); ++v) {
          // (m in Ag) * (p in Ah) = m * g(p) in A(gh)
          std::vector<CycScalar> m, p;
          for (int i = 0; i < a->dim(); ++i) m.push_back(r.center_bases[g][u].at(i, 0));
          for (int i = 0; i < a->dim(); ++i) p.push_back(r.center_bases[h][v].at(i, 0));
          std::vector<CycScalar> prod = a->mul(m, apply_vec(action.autos[g], p));
          int gh = G.op(g, h);
          CycMatrix coords = coords_in(gh, prod);
          int row = r.offsets[g] + (int)u, col = r.offsets[h] + (int)v;
          for (int t = 0; t < coords.rows(); ++t)
            sc[((size_t)row * dim + col) * dim + (r.offsets[gh] + t)] = coords.at(t, 0);
        }
  std::vector<CycScalar> unit(dim, CycScalar::zero(c));
  CycMatrix unit_coords = coords_in(G.identity(), a->unit());
  for (int t = 0; t < unit_coords.rows(); ++t)
    unit[r.offsets[G.identity()] + t] = unit_coords.at(t, 0);
  r.algebra =
      std::make_shared<const StructAlgebra>(StructAlgebra(dim, c, std::move(sc), std::move(unit)));
  for (int s = 0; s < n; ++s) {
    CycMatrix act(dim, dim, c);
    for (int g = 0; g < n; ++g) {
      int tgt = G.conjugate(s, g);
      for (size_t u = 0; u < r.center_bases[g].size(); ++u) {
        std::vector<CycScalar> m;
        for (int i = 0; i < a->dim(); ++i) m.push_back(r.center_bases[g][u].at(i, 0));
        CycMatrix coords = coords_in(tgt, apply_vec(action.autos[s], m));
        for (int t = 0; t < coords.rows(); ++t)
          act.set(r.offsets[tgt] + t, r.offsets[g] + (int)u, coords.at(t, 0));
      }
    }
    r.g_action.push_back(std::move(act));
  }
  return r;
}

GroupAction trivial_action(const GroupPtr& g, const AlgebraPtr& a) {
  GroupAction act;
  act.group = g;
  act.algebra = a;
  for (int i = 0; i < g->order(); ++i)
    act.autos.push_back(CycMatrix::identity(a->dim(), a->conductor()));
  return act;
}

}  // namespace cattrace
