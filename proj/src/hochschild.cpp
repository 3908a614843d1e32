#include "cattrace/hochschild.hpp"

#include <functional>
#include <stdexcept>

namespace cattrace {

namespace {

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Change the algebra (and bimodule actions) to a basis whose first vector
// is the unit; needed for the normalized subcomplex.
void with_unit_first(const AlgebraPtr& a, const Bimodule& m, StructAlgebra& a_out,
                     Bimodule& m_out) {
  int d = a->dim(), c = a->conductor();
  int pivot = -1;
  for (int i = 0; i < d; ++i)
    if (!a->unit()[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw std::logic_error("algebra unit is zero");
  CycMatrix p(d, d, c);
  for (int i = 0; i < d; ++i) p.set(i, 0, a->unit()[i]);
  int col = 1;
  for (int j = 0; j < d; ++j) {
    if (j == pivot) continue;
    p.set(j, col, CycScalar::one(c));
    ++col;
  }
  std::vector<CycScalar> sc((size_t)d * d * d, CycScalar::zero(c));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<CycScalar> fi, fj;
      for (int r = 0; r < d; ++r) fi.push_back(p.at(r, i));
      for (int r = 0; r < d; ++r) fj.push_back(p.at(r, j));
      auto prod = a->mul(fi, fj);
      auto coords = solve(p, CycMatrix::column(prod));
      if (!coords) throw std::logic_error("unit-first change of basis failed");
      for (int k = 0; k < d; ++k) sc[((size_t)i * d + j) * d + k] = coords->at(k, 0);
    }
  std::vector<CycScalar> unit(d, CycScalar::zero(c));
  unit[0] = CycScalar::one(c);
  a_out = StructAlgebra(d, c, std::move(sc), std::move(unit));
  m_out.dim = m.dim;
  m_out.left_act.clear();
  m_out.right_act.clear();
  for (int i = 0; i < d; ++i) {
    CycMatrix l(m.dim, m.dim, c), r(m.dim, m.dim, c);
    for (int s = 0; s < d; ++s) {
      if (!p.at(s, i).is_zero()) {
        l = mat_add(l, mat_scale(m.left_act[s], p.at(s, i)));
        r = mat_add(r, mat_scale(m.right_act[s], p.at(s, i)));
      }
    }
    m_out.left_act.push_back(std::move(l));
    m_out.right_act.push_back(std::move(r));
  }
}

struct TupleIndexer {
  int letters;  // number of allowed letters
  int offset;   // first allowed letter (0 unnormalized, 1 normalized)
  int length;

  int count() const { return ipow(letters, length); }
  std::vector<int> tuple(int rank) const {
    std::vector<int> t(length);
    for (int i = length - 1; i >= 0; --i) {
      t[i] = rank % letters + offset;
      rank /= letters;
    }
    return t;
  }
  int rank(const std::vector<int>& t) const {
    int r = 0;
    for (int x : t) {
      if (x - offset < 0 || x - offset >= letters) return -1;
      r = r * letters + (x - offset);
    }
    return r;
  }
};

}  // namespace

bool CochainComplexSlice::differentials_square_to_zero() const {
  for (size_t n = 0; n + 1 < differentials.size(); ++n)
    if (!mat_mul(differentials[n + 1], differentials[n]).is_zero()) return false;
  return true;
}

CochainComplexSlice build_bar_complex(const AlgebraPtr& a_in, const Bimodule& m_in,
                                      int max_degree, bool normalized, int cap) {
  AlgebraPtr a = a_in;
  Bimodule m = m_in;
  if (normalized) {
    StructAlgebra a2 = *a_in;
    with_unit_first(a_in, m_in, a2, m);
    m.algebra = a = std::make_shared<const StructAlgebra>(std::move(a2));
  }
  int d = a->dim(), dm = m.dim, c = a->conductor();
  int letters = normalized ? d - 1 : d;
  int offset = normalized ? 1 : 0;

  CochainComplexSlice slice;
  slice.max_degree = max_degree;
  for (int n = 0; n <= max_degree + 1; ++n) {
    long dim = (long)ipow(letters, n) * dm;
    if (n <= max_degree && dim > cap)
      throw std::invalid_argument("cochain dimension exceeds the cap");
    slice.dims.push_back((int)dim);
  }

  for (int n = 0; n <= max_degree; ++n) {
    TupleIndexer src{letters, offset, n}, dst{letters, offset, n + 1};
    CycMatrix delta(dst.count() * dm, src.count() * dm, c);
    for (int tr = 0; tr < src.count(); ++tr) {
      std::vector<int> t = src.tuple(tr);
      // first face: rows (s0, t), left action of e_{s0}
      for (int s0 = offset; s0 < d; ++s0) {
        std::vector<int> s = t;
        s.insert(s.begin(), s0);
        int sr = dst.rank(s);
        for (int b = 0; b < dm; ++b)
          for (int r = 0; r < dm; ++r) {
            const CycScalar& v = m.left_act[s0].at(r, b);
            if (!v.is_zero())
              delta.set(sr * dm + r, tr * dm + b, cyc_add(delta.at(sr * dm + r, tr * dm + b), v));
          }
      }
      // inner faces: replace slot i-1 of t by a pair (x, y) whose product
      // hits letter t[i-1]; sign (-1)^i
      for (int i = 1; i <= n; ++i) {
        int target_letter = t[i - 1];
        for (int x = offset; x < d; ++x)
          for (int y = offset; y < d; ++y) {
            const CycScalar& coeff = a->sc(x, y, target_letter);
            if (coeff.is_zero()) continue;
            std::vector<int> s;
            s.reserve(n + 1);
            for (int q = 0; q < i - 1; ++q) s.push_back(t[q]);
            s.push_back(x);
            s.push_back(y);
            for (int q = i; q < n; ++q) s.push_back(t[q]);
            int sr = dst.rank(s);
            CycScalar signed_coeff = (i % 2 == 0) ? coeff : cyc_neg(coeff);
            for (int b = 0; b < dm; ++b)
              delta.set(sr * dm + b, tr * dm + b,
                        cyc_add(delta.at(sr * dm + b, tr * dm + b), signed_coeff));
          }
      }
      // last face: rows (t, sn), right action of e_{sn}, sign (-1)^{n+1}
      for (int sn = offset; sn < d; ++sn) {
        std::vector<int> s = t;
        s.push_back(sn);
        int sr = dst.rank(s);
        for (int b = 0; b < dm; ++b)
          for (int r = 0; r < dm; ++r) {
            CycScalar v = m.right_act[sn].at(r, b);
            if (v.is_zero()) continue;
            if (n % 2 == 0) v = cyc_neg(v);  // (-1)^{n+1}
            delta.set(sr * dm + r, tr * dm + b, cyc_add(delta.at(sr * dm + r, tr * dm + b), v));
          }
      }
    }
    slice.differentials.push_back(std::move(delta));
  }
  return slice;
}

HHReport hochschild_dims(const AlgebraPtr& a, const Bimodule& m, int max_degree, bool normalized,
                         int cap) {
  CochainComplexSlice slice = build_bar_complex(a, m, max_degree, normalized, cap);
  HHReport report;
  int prev_rank = 0;
  for (int n = 0; n <= max_degree; ++n) {
    int rk = rank(slice.differentials[n]);
    report.dims.push_back(slice.dims[n] - rk - prev_rank);
    prev_rank = rk;
  }
  return report;
}

KunnethHHReport kunneth_hh(const AlgebraPtr& a, const AlgebraPtr& b, int max_degree, int cap) {
  KunnethHHReport r;
  HHReport ha = hochschild_dims(a, regular_bimodule(a), max_degree, false, cap);
  HHReport hb = hochschild_dims(b, regular_bimodule(b), max_degree, false, cap);
  auto ab = std::make_shared<const StructAlgebra>(tensor_algebra(*a, *b));
  HHReport hab = hochschild_dims(ab, regular_bimodule(ab), max_degree, false, cap);
  for (int n = 0; n <= max_degree; ++n) {
    int conv = 0;
    for (int p = 0; p <= n; ++p) conv += ha.dims[p] * hb.dims[n - p];
    r.lhs.push_back(conv);
    r.rhs.push_back(hab.dims[n]);
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

OrbifoldHHReport orbifold_hh_check(const AlgebraPtr& a, const GroupAction& action, int max_degree,
                                   int cap) {
  OrbifoldHHReport report;
  const auto& G = *action.group;
  int n_g = G.order(), d = a->dim(), c = a->conductor();

  auto crossed = std::make_shared<const StructAlgebra>(crossed_product(a, action));
  report.crossed =
      hochschild_dims(crossed, regular_bimodule(crossed), max_degree, false, cap).dims;

  // Total complex sum_g C(A, Ag) with blocks in group-element order.
  std::vector<CochainComplexSlice> slices;
  for (int g = 0; g < n_g; ++g)
    slices.push_back(build_bar_complex(a, twisted_bimodule(a, action, g), max_degree, false, cap));

  std::vector<CycMatrix> total_delta;  // degree n -> n+1
  std::vector<int> total_dims;
  for (int n = 0; n <= max_degree + 1; ++n) total_dims.push_back(slices[0].dims[n] * n_g);
  for (int n = 0; n <= max_degree; ++n) {
    CycMatrix delta(total_dims[n + 1], total_dims[n], c);
    int roff = 0, coff = 0;
    for (int g = 0; g < n_g; ++g) {
      const CycMatrix& block = slices[g].differentials[n];
      for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
          if (!block.at(i, j).is_zero()) delta.set(roff + i, coff + j, block.at(i, j));
      roff += block.rows();
      coff += block.cols();
    }
    total_delta.push_back(std::move(delta));
  }

  // G-action on cochains: (h.f)(a_1..a_n) = u_h(f(h^{-1}a_1,...,h^{-1}a_n)),
  // sending the g-summand to the hgh^{-1}-summand.
  auto action_matrix = [&](int h, int n) {
    TupleIndexer ti{d, 0, n};
    int block = ti.count() * d;
    CycMatrix rho(n_g * block, n_g * block, c);
    const CycMatrix& uh = action.autos[h];
    const CycMatrix& uhi = action.autos[G.inverse(h)];
    for (int g = 0; g < n_g; ++g) {
      int tgt = G.conjugate(h, g);
      for (int tr_dst = 0; tr_dst < ti.count(); ++tr_dst) {
        std::vector<int> tdst = ti.tuple(tr_dst);
        // coefficient of source tuple t: prod_r uhi[t_r][tdst_r]
        std::vector<int> tsrc(n, 0);
        std::function<void(int, CycScalar)> walk = [&](int pos, CycScalar coeff) {
          if (coeff.is_zero()) return;
          if (pos == n) {
            int tr_src = ti.rank(tsrc);
            for (int bs = 0; bs < d; ++bs)
              for (int bd = 0; bd < d; ++bd) {
                const CycScalar& w = uh.at(bd, bs);
                if (w.is_zero()) continue;
                int row = tgt * block + tr_dst * d + bd;
                int col = g * block + tr_src * d + bs;
                rho.set(row, col, cyc_add(rho.at(row, col), cyc_mul(coeff, w)));
              }
            return;
          }
          for (int x = 0; x < d; ++x) {
            const CycScalar& v = uhi.at(x, tdst[pos]);
            if (v.is_zero()) continue;
            tsrc[pos] = x;
            walk(pos + 1, cyc_mul(coeff, v));
          }
        };
        walk(0, CycScalar::one(c));
      }
    }
    return rho;
  };

  report.action_commutes_with_differential = true;
  std::vector<std::vector<CycMatrix>> rho(max_degree + 2);
  for (int n = 0; n <= max_degree + 1; ++n)
    for (int h = 0; h < n_g; ++h) rho[n].push_back(action_matrix(h, n));
  for (int n = 0; n <= max_degree; ++n)
    for (int h = 0; h < n_g; ++h)
      if (!(mat_mul(rho[n + 1][h], total_delta[n]) == mat_mul(total_delta[n], rho[n][h])))
        report.action_commutes_with_differential = false;

  // Invariant subcomplex, then its cohomology. Taking invariants first is
  // exact in characteristic zero so the dimensions match the fixed part of
  // the cohomology action.
  std::vector<CycMatrix> inv_bases;
  for (int n = 0; n <= max_degree + 1; ++n) {
    std::vector<CycMatrix> rows;
    for (int h = 0; h < n_g; ++h)
      rows.push_back(mat_sub(rho[n][h], CycMatrix::identity(total_dims[n], c)));
    auto basis = kernel_basis(vstack(rows));
    inv_bases.push_back(basis.empty() ? CycMatrix(total_dims[n], 0, c) : hcat(basis));
  }
  int prev_rank = 0;
  for (int n = 0; n <= max_degree; ++n) {
    if (inv_bases[n].cols() == 0) {
      report.invariants.push_back(0);
      prev_rank = 0;
      continue;
    }
    CycMatrix image = mat_mul(total_delta[n], inv_bases[n]);
    CycMatrix restricted(inv_bases[n + 1].cols(), inv_bases[n].cols(), c);
    if (inv_bases[n + 1].cols() > 0) {
      auto coords = solve(inv_bases[n + 1], image);
      if (!coords) throw std::logic_error("differential leaves the invariant subcomplex");
      restricted = *coords;
    } else if (!image.is_zero()) {
      throw std::logic_error("differential leaves the invariant subcomplex");
    }
    int rk = rank(restricted);
    report.invariants.push_back(inv_bases[n].cols() - rk - prev_rank);
    prev_rank = rk;
  }
  report.equal = report.crossed == report.invariants;
  return report;
}

}  // namespace cattrace
