#pragma once

#include <vector>

#include "cattrace/matrix.hpp"

namespace cattrace {

// Linear functor between 2-vector spaces Vect^m_src -> Vect^m_dst,
// recorded by the dimensions of its matrix of vector spaces.
struct VectMatrix {
  int m_src = 0, m_dst = 0;
  std::vector<std::vector<int>> dims;  // [dst][src]

  VectMatrix() = default;
  VectMatrix(int dst, int src);

  static VectMatrix identity(int m);
  static VectMatrix permutation(const std::vector<int>& pi);  // dims[pi[j]][j] = 1

  int at(int i, int j) const { return dims[i][j]; }
  bool same_shape(const VectMatrix& o) const { return m_src == o.m_src && m_dst == o.m_dst; }
  bool operator==(const VectMatrix& o) const {
    return m_src == o.m_src && m_dst == o.m_dst && dims == o.dims;
  }
};

// Natural transformation between two matrix functors of the same shape:
// one exact-scalar matrix per entry, shaped target.dims x source.dims.
struct TwoNat {
  VectMatrix source, target;
  int conductor = 1;
  std::vector<std::vector<CycMatrix>> blocks;  // [i][j]

  TwoNat() = default;
  TwoNat(VectMatrix src, VectMatrix dst, int conductor_);

  static TwoNat identity(const VectMatrix& f, int conductor);

  const CycMatrix& block(int i, int j) const { return blocks[i][j]; }
  bool operator==(const TwoNat& o) const;
};

struct TraceSpace {
  VectMatrix functor;          // square
  std::vector<int> summands;   // diagonal dims
  int total_dim = 0;
};

// Functor composition: (G o F).dims = integer matrix product; the composite
// summand ordering is k ascending, G-factor major inside each block.
VectMatrix compose(const VectMatrix& g, const VectMatrix& f);
// Kronecker of the dims tables with row-major pairing (i,p) -> i*n + p.
VectMatrix box(const VectMatrix& f, const VectMatrix& h);

TraceSpace ttr(const VectMatrix& f);

TwoNat vcompose(const TwoNat& psi, const TwoNat& phi);           // psi after phi
TwoNat hcompose(const TwoNat& theta, const TwoNat& eta);         // theta on G, eta on F
TwoNat nat_invert(const TwoNat& n);                              // blockwise inverse

// Trace elements are TwoNat with source = identity. Coordinates list the
// diagonal blocks top to bottom.
std::vector<CycScalar> trace_coordinates(const TwoNat& xi);
TwoNat trace_from_coordinates(const VectMatrix& f, const std::vector<CycScalar>& coords,
                              int conductor);
TwoNat trace_basis_element(const VectMatrix& f, int index, int conductor);

// mu: ttr(F) x ttr(H) -> ttr(F box H), Kronecker on the paired diagonal.
TwoNat mu(const TwoNat& xi, const TwoNat& zeta);
// Matrix of mu on the trace bases, columns indexed ttr(F)-major.
CycMatrix mu_matrix(const VectMatrix& f, const VectMatrix& h, int conductor);

}  // namespace cattrace
