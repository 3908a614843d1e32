#include "cattrace/matrix.hpp"

#include <sstream>

namespace cattrace {

CycMatrix::CycMatrix(int rows, int cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      entries_((size_t)rows * cols, CycScalar::zero(conductor)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

CycMatrix CycMatrix::identity(int n, int conductor) {
  CycMatrix m(n, n, conductor);
  for (int i = 0; i < n; ++i) m.set(i, i, CycScalar::one(conductor));
  return m;
}

CycMatrix CycMatrix::from_entries(int rows, int cols, std::vector<CycScalar> entries) {
  if ((size_t)rows * cols != entries.size())
    throw std::invalid_argument("entry count does not match shape");
  int conductor = entries.empty() ? 1 : entries[0].conductor();
  for (const auto& e : entries)
    if (e.conductor() != conductor)
      throw std::invalid_argument("matrix entries must share one conductor");
  CycMatrix m(rows, cols, conductor);
  m.entries_ = std::move(entries);
  return m;
}

CycMatrix CycMatrix::column(const std::vector<CycScalar>& v) {
  return from_entries((int)v.size(), 1, v);
}

void CycMatrix::set(int i, int j, const CycScalar& v) {
  if (v.conductor() != conductor_)
    throw std::invalid_argument("entry conductor differs from matrix conductor");
  entries_[i * cols_ + j] = v;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && conductor_ == o.conductor_ &&
         entries_ == o.entries_;
}

bool CycMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) os << at(i, j).to_string() << (j + 1 < cols_ ? ", " : " ");
    os << "]\n";
  }
  return os.str();
}

namespace {
void require_shape(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  if (a.conductor() != b.conductor())
    throw std::invalid_argument("matrix conductor mismatch");
}
}  // namespace

CycMatrix mat_add(const CycMatrix& a, const CycMatrix& b) {
  require_shape(a, b);
  std::vector<CycScalar> e;
  e.reserve(a.entries().size());
  for (size_t i = 0; i < a.entries().size(); ++i)
    e.push_back(cyc_add(a.entries()[i], b.entries()[i]));
  return CycMatrix::from_entries(a.rows(), a.cols(), std::move(e));
}

CycMatrix mat_sub(const CycMatrix& a, const CycMatrix& b) {
  require_shape(a, b);
  std::vector<CycScalar> e;
  e.reserve(a.entries().size());
  for (size_t i = 0; i < a.entries().size(); ++i)
    e.push_back(cyc_sub(a.entries()[i], b.entries()[i]));
  return CycMatrix::from_entries(a.rows(), a.cols(), std::move(e));
}

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  if (a.conductor() != b.conductor())
    throw std::invalid_argument("matrix conductor mismatch");
  CycMatrix r(a.rows(), b.cols(), a.conductor());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.set(i, j, cyc_add(r.at(i, j), cyc_mul(a.at(i, k), b.at(k, j))));
      }
    }
  return r;
}

CycMatrix mat_scale(const CycMatrix& a, const CycScalar& s) {
  if (s.conductor() != a.conductor())
    throw std::invalid_argument("scalar conductor mismatch");
  std::vector<CycScalar> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) e.push_back(cyc_mul(x, s));
  return CycMatrix::from_entries(a.rows(), a.cols(), std::move(e));
}

CycMatrix mat_promote(const CycMatrix& a, int conductor) {
  std::vector<CycScalar> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) e.push_back(promote(x, conductor));
  CycMatrix m(a.rows(), a.cols(), conductor);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, e[i * a.cols() + j]);
  return m;
}

namespace {

struct Rref {
  std::vector<std::vector<CycScalar>> m;  // reduced rows
  std::vector<int> pivot_cols;            // pivot column per reduced row
  int rows, cols;
};

Rref rref(const CycMatrix& a) {
  Rref r;
  r.rows = a.rows();
  r.cols = a.cols();
  r.m.assign(a.rows(), {});
  for (int i = 0; i < a.rows(); ++i) {
    r.m[i].reserve(a.cols());
    for (int j = 0; j < a.cols(); ++j) r.m[i].push_back(a.at(i, j));
  }
  int row = 0;
  for (int col = 0; col < r.cols && row < r.rows; ++col) {
    int pr = -1;
    for (int i = row; i < r.rows; ++i)
      if (!r.m[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(r.m[row], r.m[pr]);
    CycScalar inv = cyc_inv(r.m[row][col]);
    for (int j = col; j < r.cols; ++j) r.m[row][j] = cyc_mul(r.m[row][j], inv);
    for (int i = 0; i < r.rows; ++i) {
      if (i == row || r.m[i][col].is_zero()) continue;
      CycScalar f = r.m[i][col];
      for (int j = col; j < r.cols; ++j)
        r.m[i][j] = cyc_sub(r.m[i][j], cyc_mul(f, r.m[row][j]));
    }
    r.pivot_cols.push_back(col);
    ++row;
  }
  return r;
}

}  // namespace

int rank(const CycMatrix& m) { return (int)rref(m).pivot_cols.size(); }

std::vector<CycMatrix> kernel_basis(const CycMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<CycMatrix> basis;
  int conductor = m.conductor();
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycScalar> v(m.cols(), CycScalar::zero(conductor));
    v[free] = CycScalar::one(conductor);
    for (size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
      v[r.pivot_cols[pr]] = cyc_neg(r.m[pr][free]);
    basis.push_back(CycMatrix::column(v));
  }
  return basis;
}

std::optional<CycMatrix> solve(const CycMatrix& m, const CycMatrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  if (m.conductor() != b.conductor()) throw std::invalid_argument("solve: conductor mismatch");
  // Eliminate on [M | b] and read a particular solution off the pivots.
  CycMatrix aug(m.rows(), m.cols() + b.cols(), m.conductor());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    for (int j = 0; j < b.cols(); ++j) aug.set(i, m.cols() + j, b.at(i, j));
  }
  Rref r = rref(aug);
  for (size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
    if (r.pivot_cols[pr] >= m.cols()) return std::nullopt;  // pivot in the rhs: inconsistent
  CycMatrix x(m.cols(), b.cols(), m.conductor());
  for (size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
    for (int j = 0; j < b.cols(); ++j) x.set(r.pivot_cols[pr], j, r.m[pr][m.cols() + j]);
  return x;
}

CycScalar mat_trace(const CycMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace of a non-square matrix");
  CycScalar t = CycScalar::zero(m.conductor());
  for (int i = 0; i < m.rows(); ++i) t = cyc_add(t, m.at(i, i));
  return t;
}

CycMatrix kron(const CycMatrix& m, const CycMatrix& n) {
  if (m.conductor() != n.conductor())
    throw std::invalid_argument("kron: conductor mismatch");
  CycMatrix r(m.rows() * n.rows(), m.cols() * n.cols(), m.conductor());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      for (int p = 0; p < n.rows(); ++p)
        for (int q = 0; q < n.cols(); ++q) {
          if (n.at(p, q).is_zero()) continue;
          r.set(i * n.rows() + p, j * n.cols() + q, cyc_mul(m.at(i, j), n.at(p, q)));
        }
    }
  return r;
}

std::optional<CycMatrix> mat_inverse(const CycMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  // [M | I] always has full row rank, so a singular M forces a pivot into
  // the right-hand block and solve reports the inconsistency.
  return solve(m, CycMatrix::identity(m.rows(), m.conductor()));
}

CycMatrix vstack(const std::vector<CycMatrix>& blocks) {
  if (blocks.empty()) return CycMatrix();
  int cols = blocks[0].cols(), conductor = blocks[0].conductor(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols || b.conductor() != conductor)
      throw std::invalid_argument("vstack: incompatible blocks");
    rows += b.rows();
  }
  CycMatrix r(rows, cols, conductor);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < cols; ++j) r.set(off + i, j, b.at(i, j));
    off += b.rows();
  }
  return r;
}

CycMatrix hcat(const std::vector<CycMatrix>& columns) {
  if (columns.empty()) return CycMatrix();
  int rows = columns[0].rows(), conductor = columns[0].conductor();
  int cols = 0;
  for (const auto& c : columns) {
    if (c.rows() != rows || c.conductor() != conductor)
      throw std::invalid_argument("hcat: incompatible columns");
    cols += c.cols();
  }
  CycMatrix r(rows, cols, conductor);
  int off = 0;
  for (const auto& c : columns) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < c.cols(); ++j) r.set(i, off + j, c.at(i, j));
    off += c.cols();
  }
  return r;
}

CycMatrix apply(const CycMatrix& m, const std::vector<CycScalar>& v) {
  return mat_mul(m, CycMatrix::column(v));
}

std::vector<CycScalar> apply_vec(const CycMatrix& m, const std::vector<CycScalar>& v) {
  CycMatrix r = apply(m, v);
  std::vector<CycScalar> out;
  out.reserve(r.rows());
  for (int i = 0; i < r.rows(); ++i) out.push_back(r.at(i, 0));
  return out;
}

}  // namespace cattrace
