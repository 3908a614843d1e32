#pragma once

#include <cstdint>
#include <vector>

namespace cattrace {

// Dense linear algebra over F_p (p prime), used by the cocycle module to
// enumerate solution spaces of the additive cocycle condition.
class ModPMatrix {
 public:
  ModPMatrix(int rows, int cols, uint32_t p)
      : rows_(rows), cols_(cols), p_(p), e_((size_t)rows * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint32_t p() const { return p_; }

  uint32_t at(int i, int j) const { return e_[i * cols_ + j]; }
  void set(int i, int j, uint32_t v) { e_[i * cols_ + j] = v % p_; }
  void add_at(int i, int j, int64_t v);

  int rank() const;
  // Kernel basis vectors, one per free column, deterministic order.
  std::vector<std::vector<uint32_t>> kernel() const;

 private:
  int rows_, cols_;
  uint32_t p_;
  std::vector<uint32_t> e_;
};

uint32_t modp_inverse(uint32_t a, uint32_t p);

}  // namespace cattrace
