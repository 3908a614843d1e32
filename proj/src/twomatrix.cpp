#include "cattrace/twomatrix.hpp"

#include <stdexcept>

namespace cattrace {

VectMatrix::VectMatrix(int dst, int src)
    : m_src(src), m_dst(dst), dims(dst, std::vector<int>(src, 0)) {
  if (src <= 0 || dst <= 0) throw std::invalid_argument("VectMatrix sides must be positive");
}

VectMatrix VectMatrix::identity(int m) {
  VectMatrix f(m, m);
  for (int i = 0; i < m; ++i) f.dims[i][i] = 1;
  return f;
}

VectMatrix VectMatrix::permutation(const std::vector<int>& pi) {
  int m = (int)pi.size();
  VectMatrix f(m, m);
  for (int j = 0; j < m; ++j) f.dims[pi[j]][j] = 1;
  return f;
}

TwoNat::TwoNat(VectMatrix src, VectMatrix dst, int conductor_)
    : source(std::move(src)), target(std::move(dst)), conductor(conductor_) {
  if (!source.same_shape(target)) throw std::invalid_argument("TwoNat shape mismatch");
  blocks.assign(source.m_dst, {});
  for (int i = 0; i < source.m_dst; ++i)
    for (int j = 0; j < source.m_src; ++j)
      blocks[i].emplace_back(target.dims[i][j], source.dims[i][j], conductor);
}

TwoNat TwoNat::identity(const VectMatrix& f, int conductor) {
  TwoNat n(f, f, conductor);
  for (int i = 0; i < f.m_dst; ++i)
    for (int j = 0; j < f.m_src; ++j)
      n.blocks[i][j] = CycMatrix::identity(f.dims[i][j], conductor);
  return n;
}

bool TwoNat::operator==(const TwoNat& o) const {
  return source == o.source && target == o.target && conductor == o.conductor &&
         blocks == o.blocks;
}

VectMatrix compose(const VectMatrix& g, const VectMatrix& f) {
  if (f.m_dst != g.m_src) throw std::invalid_argument("compose: shape mismatch");
  VectMatrix r(g.m_dst, f.m_src);
  for (int i = 0; i < g.m_dst; ++i)
    for (int j = 0; j < f.m_src; ++j) {
      int d = 0;
      for (int k = 0; k < g.m_src; ++k) d += g.dims[i][k] * f.dims[k][j];
      r.dims[i][j] = d;
    }
  return r;
}

VectMatrix box(const VectMatrix& f, const VectMatrix& h) {
  VectMatrix r(f.m_dst * h.m_dst, f.m_src * h.m_src);
  for (int i = 0; i < f.m_dst; ++i)
    for (int j = 0; j < f.m_src; ++j)
      for (int p = 0; p < h.m_dst; ++p)
        for (int q = 0; q < h.m_src; ++q)
          r.dims[i * h.m_dst + p][j * h.m_src + q] = f.dims[i][j] * h.dims[p][q];
  return r;
}

TraceSpace ttr(const VectMatrix& f) {
  if (f.m_src != f.m_dst) throw std::invalid_argument("ttr: functor must be square");
  TraceSpace t;
  t.functor = f;
  for (int i = 0; i < f.m_src; ++i) {
    t.summands.push_back(f.dims[i][i]);
    t.total_dim += f.dims[i][i];
  }
  return t;
}

TwoNat vcompose(const TwoNat& psi, const TwoNat& phi) {
  if (!(phi.target == psi.source)) throw std::invalid_argument("vcompose: middle mismatch");
  if (phi.conductor != psi.conductor) throw std::invalid_argument("vcompose: conductor mismatch");
  TwoNat r(phi.source, psi.target, phi.conductor);
  for (int i = 0; i < r.source.m_dst; ++i)
    for (int j = 0; j < r.source.m_src; ++j)
      r.blocks[i][j] = mat_mul(psi.blocks[i][j], phi.blocks[i][j]);
  return r;
}

TwoNat hcompose(const TwoNat& theta, const TwoNat& eta) {
  // theta: G => G', eta: F => F'; result on G o F => G' o F'. The (i,j)
  // block is the direct sum over k of kron(theta[i][k], eta[k][j]) in the
  // composite summand ordering.
  if (theta.source.m_src != eta.source.m_dst)
    throw std::invalid_argument("hcompose: shape mismatch");
  if (theta.conductor != eta.conductor)
    throw std::invalid_argument("hcompose: conductor mismatch");
  VectMatrix src = compose(theta.source, eta.source);
  VectMatrix dst = compose(theta.target, eta.target);
  TwoNat r(src, dst, theta.conductor);
  for (int i = 0; i < src.m_dst; ++i)
    for (int j = 0; j < src.m_src; ++j) {
      CycMatrix block(dst.dims[i][j], src.dims[i][j], theta.conductor);
      int row_off = 0, col_off = 0;
      for (int k = 0; k < theta.source.m_src; ++k) {
        CycMatrix piece = kron(theta.blocks[i][k], eta.blocks[k][j]);
        for (int a = 0; a < piece.rows(); ++a)
          for (int b = 0; b < piece.cols(); ++b)
            block.set(row_off + a, col_off + b, piece.at(a, b));
        row_off += piece.rows();
        col_off += piece.cols();
      }
      r.blocks[i][j] = std::move(block);
    }
  return r;
}

TwoNat nat_invert(const TwoNat& n) {
  TwoNat r(n.target, n.source, n.conductor);
  for (int i = 0; i < n.source.m_dst; ++i)
    for (int j = 0; j < n.source.m_src; ++j) {
      const CycMatrix& b = n.blocks[i][j];
      if (b.rows() != b.cols()) throw std::invalid_argument("nat_invert: non-square block");
      if (b.rows() == 0) {
        r.blocks[i][j] = b;
        continue;
      }
      auto inv = mat_inverse(b);
      if (!inv) throw std::domain_error("nat_invert: singular block");
      r.blocks[i][j] = *inv;
    }
  return r;
}

std::vector<CycScalar> trace_coordinates(const TwoNat& xi) {
  if (!(xi.source == VectMatrix::identity(xi.source.m_src)))
    throw std::invalid_argument("trace element must have identity source");
  std::vector<CycScalar> coords;
  for (int i = 0; i < xi.source.m_src; ++i) {
    const CycMatrix& b = xi.blocks[i][i];
    for (int a = 0; a < b.rows(); ++a) coords.push_back(b.at(a, 0));
  }
  return coords;
}

TwoNat trace_from_coordinates(const VectMatrix& f, const std::vector<CycScalar>& coords,
                              int conductor) {
  TraceSpace t = ttr(f);
  if ((int)coords.size() != t.total_dim)
    throw std::invalid_argument("trace coordinate count mismatch");
  TwoNat xi(VectMatrix::identity(f.m_src), f, conductor);
  int pos = 0;
  for (int i = 0; i < f.m_src; ++i) {
    CycMatrix b(f.dims[i][i], 1, conductor);
    for (int a = 0; a < f.dims[i][i]; ++a) b.set(a, 0, promote(coords[pos++], conductor));
    xi.blocks[i][i] = std::move(b);
  }
  return xi;
}

TwoNat trace_basis_element(const VectMatrix& f, int index, int conductor) {
  TraceSpace t = ttr(f);
  std::vector<CycScalar> coords(t.total_dim, CycScalar::zero(conductor));
  coords[index] = CycScalar::one(conductor);
  return trace_from_coordinates(f, coords, conductor);
}

TwoNat mu(const TwoNat& xi, const TwoNat& zeta) {
  const VectMatrix& f = xi.target;
  const VectMatrix& h = zeta.target;
  if (xi.conductor != zeta.conductor) throw std::invalid_argument("mu: conductor mismatch");
  if (f.m_src != f.m_dst || h.m_src != h.m_dst)
    throw std::invalid_argument("mu: trace elements need square functors");
  VectMatrix fb = box(f, h);
  TwoNat r(VectMatrix::identity(fb.m_src), fb, xi.conductor);
  int n = h.m_src;
  for (int i = 0; i < f.m_src; ++i)
    for (int p = 0; p < n; ++p)
      r.blocks[i * n + p][i * n + p] = kron(xi.blocks[i][i], zeta.blocks[p][p]);
  return r;
}

CycMatrix mu_matrix(const VectMatrix& f, const VectMatrix& h, int conductor) {
  TraceSpace tf = ttr(f), th = ttr(h), tfh = ttr(box(f, h));
  CycMatrix m(tfh.total_dim, tf.total_dim * th.total_dim, conductor);
  for (int a = 0; a < tf.total_dim; ++a) {
    TwoNat xi = trace_basis_element(f, a, conductor);
    for (int b = 0; b < th.total_dim; ++b) {
      TwoNat zeta = trace_basis_element(h, b, conductor);
      std::vector<CycScalar> img = trace_coordinates(mu(xi, zeta));
      for (int r = 0; r < tfh.total_dim; ++r) m.set(r, a * th.total_dim + b, img[r]);
    }
  }
  return m;
}

}  // namespace cattrace
