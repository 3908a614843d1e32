#pragma once

#include <optional>
#include <vector>

#include "cattrace/cyclotomic.hpp"

namespace cattrace {

// Dense matrix over one cyclotomic field; entries row-major, all sharing
// the matrix conductor. Elimination uses the first nonzero pivot in
// (row, col) order — exact arithmetic needs no pivot strategy and this
// keeps results deterministic.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0), conductor_(1) {}
  CycMatrix(int rows, int cols, int conductor);

  static CycMatrix identity(int n, int conductor);
  static CycMatrix from_entries(int rows, int cols, std::vector<CycScalar> entries);
  static CycMatrix column(const std::vector<CycScalar>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int conductor() const { return conductor_; }

  const CycScalar& at(int i, int j) const { return entries_[i * cols_ + j]; }
  void set(int i, int j, const CycScalar& v);

  const std::vector<CycScalar>& entries() const { return entries_; }

  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::string to_string() const;

 private:
  int rows_, cols_, conductor_;
  std::vector<CycScalar> entries_;
};

CycMatrix mat_add(const CycMatrix& a, const CycMatrix& b);
CycMatrix mat_sub(const CycMatrix& a, const CycMatrix& b);
CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b);
CycMatrix mat_scale(const CycMatrix& a, const CycScalar& s);
CycMatrix mat_promote(const CycMatrix& a, int conductor);

int rank(const CycMatrix& m);
// Basis column vectors of {v : M v = 0}, deterministic free-variable order.
std::vector<CycMatrix> kernel_basis(const CycMatrix& m);
// One solution of M x = b (b may have several columns); nullopt iff inconsistent.
std::optional<CycMatrix> solve(const CycMatrix& m, const CycMatrix& b);
CycScalar mat_trace(const CycMatrix& m);
// Row-major block convention: entry (i*rowsN+p, j*colsN+q) = M[i,j]*N[p,q].
CycMatrix kron(const CycMatrix& m, const CycMatrix& n);
// Square-matrix inverse; nullopt if singular.
std::optional<CycMatrix> mat_inverse(const CycMatrix& m);

// Stack matrices with equal column counts on top of each other.
CycMatrix vstack(const std::vector<CycMatrix>& blocks);
// Concatenate column vectors into one matrix.
CycMatrix hcat(const std::vector<CycMatrix>& columns);

CycMatrix apply(const CycMatrix& m, const std::vector<CycScalar>& v);  // m*v as column
std::vector<CycScalar> apply_vec(const CycMatrix& m, const std::vector<CycScalar>& v);

}  // namespace cattrace
