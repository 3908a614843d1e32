#include "cattrace/modp.hpp"

#include <stdexcept>

namespace cattrace {

uint32_t modp_inverse(uint32_t a, uint32_t p) {
  // Extended Euclid; a must be nonzero mod p.
  int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return (uint32_t)((t % p + p) % p);
}

void ModPMatrix::add_at(int i, int j, int64_t v) {
  int64_t cur = e_[i * cols_ + j];
  cur = (cur + v) % (int64_t)p_;
  if (cur < 0) cur += p_;
  e_[i * cols_ + j] = (uint32_t)cur;
}

namespace {
struct RrefP {
  std::vector<std::vector<uint32_t>> m;
  std::vector<int> pivot_cols;
};

RrefP rref(const ModPMatrix& a) {
  RrefP r;
  r.m.assign(a.rows(), std::vector<uint32_t>(a.cols(), 0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.m[i][j] = a.at(i, j);
  uint32_t p = a.p();
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < a.rows(); ++i)
      if (r.m[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(r.m[row], r.m[pr]);
    uint64_t inv = modp_inverse(r.m[row][col], p);
    for (int j = col; j < a.cols(); ++j) r.m[row][j] = (uint32_t)(r.m[row][j] * inv % p);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || r.m[i][col] == 0) continue;
      uint64_t f = r.m[i][col];
      for (int j = col; j < a.cols(); ++j)
        r.m[i][j] = (uint32_t)((r.m[i][j] + (p - f) * (uint64_t)r.m[row][j]) % p);
    }
    r.pivot_cols.push_back(col);
    ++row;
  }
  return r;
}
}  // namespace

int ModPMatrix::rank() const { return (int)rref(*this).pivot_cols.size(); }

std::vector<std::vector<uint32_t>> ModPMatrix::kernel() const {
  RrefP r = rref(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[free] = 1;
    for (size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
      v[r.pivot_cols[pr]] = (p_ - r.m[pr][free]) % p_;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cattrace
